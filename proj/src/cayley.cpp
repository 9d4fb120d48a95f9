#include "caycodes/cayley.hpp"

#include <set>
#include <stdexcept>

namespace caycodes {

namespace {

Digraph build_digraph(const AbelianGroup& g, const GenPair& gens) {
  const GroupElement zero = g.identity();
  if (gens.s == zero || gens.s_prime == zero)
    throw std::invalid_argument("build_cayley: generators must be nonzero");
  if (gens.s == gens.s_prime)
    throw std::invalid_argument("build_cayley: generators must be distinct");
  if (g.order() > 1000000)
    throw std::invalid_argument("build_cayley: group order exceeds 10^6");
  if (!g.generates(gens.s, gens.s_prime))
    throw std::invalid_argument(
        "build_cayley: pair does not generate the group (digraph would not be strongly connected)");

  const long long n = g.order();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) labels.push_back(g.format(g.element_at(i)));
  Digraph d(static_cast<int>(n), std::move(labels));
  for (long long i = 0; i < n; ++i) {
    GroupElement x = g.element_at(i);
    d.add_arc(static_cast<int>(i), static_cast<int>(g.index_of(g.add(x, gens.s))));
    d.add_arc(static_cast<int>(i), static_cast<int>(g.index_of(g.add(x, gens.s_prime))));
  }
  return d;
}

}  // namespace

CayleyDigraph::CayleyDigraph(AbelianGroup group, GenPair gens)
    : group_(std::move(group)),
      gens_(std::move(gens)),
      digraph_(build_digraph(group_, gens_)) {}

CayleyDigraph build_cayley(const AbelianGroup& group, const GenPair& gens) {
  return CayleyDigraph(group, gens);
}

int CayleyDigraph::vertex_of(const GroupElement& e) const {
  return static_cast<int>(group_.index_of(e));
}

GroupElement CayleyDigraph::element_of(int v) const {
  return group_.element_at(v);
}

GroupElement CayleyDigraph::xcoord(long long i, long long j) const {
  return group_.add(group_.scalar_mul(i, gens_.s), group_.scalar_mul(j, gens_.s_prime));
}

int CayleyDigraph::xcoord_vertex(long long i, long long j) const {
  return vertex_of(xcoord(i, j));
}

AssignmentParams extract_params(const CayleyDigraph& c, const GenPair& assignment) {
  const AbelianGroup& g = c.group();
  const GenPair& gens = c.gens();
  bool same = assignment == gens;
  bool flipped = assignment == swapped(gens);
  if (!same && !flipped)
    throw std::invalid_argument("extract_params: assignment is not an ordering of the generating pair");

  AssignmentParams p;
  p.assignment = assignment;
  p.m = g.order_of(assignment.s);

  std::set<GroupElement> span_s;
  for (const auto& e : g.cyclic_subgroup(assignment.s)) span_s.insert(e);

  GroupElement t = assignment.s_prime;
  p.l = 1;
  while (span_s.count(t) == 0) {
    t = g.add(t, assignment.s_prime);
    ++p.l;
  }

  GroupElement target = g.negate(g.scalar_mul(p.l, assignment.s_prime));
  GroupElement multiple = g.identity();
  p.h = -1;
  for (long long h = 0; h < p.m; ++h) {
    if (multiple == target) {
      p.h = h;
      break;
    }
    multiple = g.add(multiple, assignment.s);
  }
  if (p.h < 0 || p.m * p.l != g.order())
    throw std::logic_error("extract_params: parameter extraction failed");
  return p;
}

std::vector<int> natural_map(const CayleyDigraph& c, const AssignmentParams& p) {
  const AbelianGroup& g = c.group();
  const long long n = g.order();
  std::vector<int> map(static_cast<std::size_t>(p.m * p.l), -1);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  GroupElement row = g.identity();
  for (long long a = 0; a < p.m; ++a) {
    GroupElement t = row;
    for (long long b = 0; b < p.l; ++b) {
      int v = static_cast<int>(g.index_of(t));
      if (hit[v]) throw std::logic_error("natural_map: map is not a bijection");
      hit[v] = 1;
      map[static_cast<std::size_t>(a * p.l + b)] = v;
      t = g.add(t, p.assignment.s_prime);
    }
    row = g.add(row, p.assignment.s);
  }
  return map;
}

}  // namespace caycodes
