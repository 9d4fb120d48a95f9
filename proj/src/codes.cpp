#include "caycodes/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace caycodes {

CodeSet verify_code(const Digraph& d, std::vector<int> candidate) {
  std::sort(candidate.begin(), candidate.end());
  if (std::adjacent_find(candidate.begin(), candidate.end()) != candidate.end())
    throw std::invalid_argument("verify_code: duplicate vertex in candidate set");
  const int n = d.vertex_count();
  std::vector<int> dominated(n, 0);
  for (int c : candidate) {
    if (c < 0 || c >= n) throw std::out_of_range("verify_code: vertex out of range");
    ++dominated[c];
    for (int w : d.out_neighbors(c)) ++dominated[w];
  }
  CodeSet out;
  out.vertices = std::move(candidate);
  out.verdict = Verdict::perfect;
  for (int v = 0; v < n; ++v) {
    if (dominated[v] != 1) {
      out.verdict = Verdict::failed;
      out.witness = v;
      break;
    }
  }
  return out;
}

CoverInstance build_cover_instance(const Digraph& d) {
  CoverInstance inst;
  inst.universe_size = d.vertex_count();
  inst.candidates.resize(inst.universe_size);
  for (int v = 0; v < inst.universe_size; ++v) {
    auto& c = inst.candidates[v];
    c = d.out_neighbors(v);
    c.insert(std::lower_bound(c.begin(), c.end(), v), v);
  }
  return inst;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const CoverInstance& inst, bool early_exit)
      : inst_(inst),
        covered_(inst.universe_size, 0),
        dominators_(inst.universe_size),
        early_exit_(early_exit) {
    for (int u = 0; u < inst.universe_size; ++u)
      for (int w : inst.candidates[u]) dominators_[w].push_back(u);
  }

  bool alive(int u) const {
    for (int w : inst_.candidates[u])
      if (covered_[w]) return false;
    return true;
  }

  void choose(int u) {
    for (int w : inst_.candidates[u]) covered_[w] = 1;
    covered_count_ += static_cast<int>(inst_.candidates[u].size());
    chosen_.push_back(u);
  }

  void unchoose(int u) {
    for (int w : inst_.candidates[u]) covered_[w] = 0;
    covered_count_ -= static_cast<int>(inst_.candidates[u].size());
    chosen_.pop_back();
  }

  void run() {
    if (stop_) return;
    if (covered_count_ == inst_.universe_size) {
      solutions_.push_back(chosen_);
      if (early_exit_) stop_ = true;
      return;
    }
    // Fewest-remaining-dominators vertex selection; a vertex with none left
    // prunes the branch immediately.
    int best = -1, best_count = inst_.universe_size + 1;
    for (int v = 0; v < inst_.universe_size && best_count > 1; ++v) {
      if (covered_[v]) continue;
      int count = 0;
      for (int u : dominators_[v])
        if (alive(u)) ++count;
      if (count == 0) return;
      if (count < best_count) {
        best_count = count;
        best = v;
      }
    }
    for (int u : dominators_[best]) {
      if (!alive(u)) continue;
      choose(u);
      run();
      unchoose(u);
      if (stop_) return;
    }
  }

  std::vector<std::vector<int>> take_solutions() { return std::move(solutions_); }

 private:
  const CoverInstance& inst_;
  std::vector<char> covered_;
  std::vector<std::vector<int>> dominators_;
  std::vector<int> chosen_;
  std::vector<std::vector<int>> solutions_;
  int covered_count_ = 0;
  bool early_exit_ = false;
  bool stop_ = false;
};

}  // namespace

std::vector<CodeSet> enumerate_codes(const Digraph& d, const EnumerateOptions& options) {
  if (d.vertex_count() > options.size_cap)
    throw std::invalid_argument("enumerate_codes: vertex count exceeds the size cap");
  CoverInstance inst = build_cover_instance(d);
  CoverSearch search(inst, options.early_exit);
  if (options.require_vertex) {
    int w = *options.require_vertex;
    if (w < 0 || w >= inst.universe_size)
      throw std::out_of_range("enumerate_codes: required vertex out of range");
    search.choose(w);
    search.run();
  } else {
    search.run();
  }
  std::vector<std::vector<int>> solutions = search.take_solutions();
  for (auto& s : solutions) std::sort(s.begin(), s.end());
  std::sort(solutions.begin(), solutions.end());

  std::vector<CodeSet> out;
  out.reserve(solutions.size());
  for (auto& s : solutions) {
    CodeSet code = verify_code(d, std::move(s));
    if (code.verdict != Verdict::perfect)
      throw std::logic_error("enumerate_codes: search produced a non-perfect code");
    out.push_back(std::move(code));
  }
  return out;
}

CodeSet identity_code_family(const CayleyDigraph& c, const AssignmentParams& p) {
  if (p.m % 3 != 0 || (p.l - p.h) % 3 != 0)
    throw std::invalid_argument("identity_code_family: requires 3 | m and 3 | (l - h)");
  const AbelianGroup& g = c.group();
  const long long b = std::gcd(p.l - p.h, p.m);
  std::set<int> members;
  for (long long i = 0; i < b / 3; ++i) {
    // m*l kills both coefficients, so r in [m*l] covers the whole family.
    for (long long r = 0; r < p.m * p.l; ++r) {
      GroupElement e = g.add(g.scalar_mul(3 * i + r, p.assignment.s),
                             g.scalar_mul(r, p.assignment.s_prime));
      members.insert(c.vertex_of(e));
    }
  }
  CodeSet out = verify_code(c.digraph(), {members.begin(), members.end()});
  return out;
}

LemmaReport check_lemmas(const CayleyDigraph& c, const CodeSet& code) {
  if (code.verdict != Verdict::perfect)
    throw std::invalid_argument("check_lemmas: code must be verified perfect");
  const AbelianGroup& g = c.group();
  const GenPair& gens = c.gens();
  std::unordered_set<int> in_code(code.vertices.begin(), code.vertices.end());
  auto member = [&](const GroupElement& e) { return in_code.count(c.vertex_of(e)) > 0; };

  LemmaReport r;
  r.no_involution = g.order_of(gens.s) != 2 && g.order_of(gens.s_prime) != 2;

  const GroupElement diag = g.add(gens.s, gens.s_prime);
  r.diagonal_closed = true;
  r.spacing_ok = true;
  for (int v : code.vertices) {
    GroupElement e = c.element_of(v);
    if (!member(g.add(e, diag))) r.diagonal_closed = false;
    for (const GroupElement& step : {gens.s, gens.s_prime}) {
      GroupElement e1 = g.add(e, step);
      GroupElement e2 = g.add(e1, step);
      GroupElement e3 = g.add(e2, step);
      if (member(e1) || member(e2) || !member(e3)) r.spacing_ok = false;
    }
  }

  AssignmentParams p1 = extract_params(c, gens);
  AssignmentParams p2 = extract_params(c, swapped(gens));
  r.wrap_offset_div3 = (p1.l - p1.h) % 3 == 0 && (p2.l - p2.h) % 3 == 0;
  return r;
}

}  // namespace caycodes
