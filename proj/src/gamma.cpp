#include "caycodes/gamma.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "caycodes/numth.hpp"

namespace caycodes {

bool is_degenerate(const GammaParams& p) {
  if (p.m == 1) return true;  // row arcs would be loops
  return p.l == 1 && (p.h == 0 || p.h == p.m - 1);
}

void validate_params(const GammaParams& p) {
  if (p.m < 1 || p.l < 1 || p.h < 0 || p.h >= p.m)
    throw std::invalid_argument("gamma params: need m >= 1, l >= 1, 0 <= h < m");
  if (p.m * p.l > 1000000)
    throw std::invalid_argument("gamma params: vertex count exceeds 10^6");
  if (is_degenerate(p)) {
    std::ostringstream os;
    os << "gamma params (m=" << p.m << ",l=" << p.l << ",h=" << p.h << ") are degenerate: "
       << (p.l == 1 && p.h == 0 ? "wrap arc would be a loop"
           : p.m == 1           ? "row arcs would be loops"
                                : "wrap arc would duplicate a row arc");
    throw std::invalid_argument(os.str());
  }
}

GammaDigraph::GammaDigraph(const GammaParams& p)
    : params_(p), digraph_([&p]() {
        validate_params(p);
        const long long m = p.m, l = p.l, h = p.h;
        std::vector<std::string> labels;
        labels.reserve(static_cast<std::size_t>(m * l));
        for (long long a = 0; a < m; ++a)
          for (long long b = 0; b < l; ++b) {
            std::ostringstream os;
            os << '(' << a << ',' << b << ')';
            labels.push_back(os.str());
          }
        Digraph d(static_cast<int>(m * l), std::move(labels));
        auto idx = [l](long long a, long long b) { return static_cast<int>(a * l + b); };
        for (long long a = 0; a < m; ++a) {
          for (long long b = 0; b < l; ++b)
            d.add_arc(idx(a, b), idx((a + 1) % m, b));
          for (long long c = 0; c + 1 < l; ++c)
            d.add_arc(idx(a, c), idx(a, c + 1));
          d.add_arc(idx(a, l - 1), idx(mod_reduce(a - h, m), 0));
        }
        return d;
      }()) {}

GammaDigraph build_gamma(const GammaParams& p) { return GammaDigraph(p); }

int GammaDigraph::vertex_of(long long a, long long b) const {
  if (a < 0 || a >= params_.m || b < 0 || b >= params_.l)
    throw std::out_of_range("GammaDigraph: coordinate out of range");
  return static_cast<int>(a * params_.l + b);
}

std::pair<long long, long long> GammaDigraph::coord_of(int v) const {
  if (v < 0 || v >= digraph_.vertex_count())
    throw std::out_of_range("GammaDigraph: vertex out of range");
  return {v / params_.l, v % params_.l};
}

std::pair<long long, long long> normalize(const GammaParams& p, long long i, long long j) {
  if (p.m < 1 || p.l < 1 || p.h < 0 || p.h >= p.m)
    throw std::invalid_argument("gamma params: need m >= 1, l >= 1, 0 <= h < m");
  auto [n, r] = euclid_divmod(j, p.l);
  return {mod_reduce(i - n * p.h, p.m), r};
}

ConditionReport check_conditions(const GammaParams& p) {
  if (p.m < 1 || p.l < 1 || p.h < 0 || p.h >= p.m)
    throw std::invalid_argument("gamma params: need m >= 1, l >= 1, 0 <= h < m");
  ConditionReport r;
  r.div3_m = p.m % 3 == 0;
  r.div3_lh = (p.l - p.h) % 3 == 0;
  r.sigma_ok = true;
  const long long g = std::gcd(p.m, p.h);  // gcd(m, 0) = m
  for (long long prime : prime_divisors(p.m * p.l)) {
    Valuation vg = padic_valuation(prime, g);
    if (vg != padic_valuation(prime, p.m) && vg != padic_valuation(prime, p.m - p.h)) {
      r.sigma_ok = false;
      break;
    }
  }
  r.admits_code = r.div3_m && r.div3_lh;
  r.cayley_abelian = r.sigma_ok;
  return r;
}

std::vector<std::vector<GammaCoord>> canonical_code_parts(const GammaParams& p) {
  ConditionReport cond = check_conditions(p);
  if (!cond.admits_code)
    throw std::invalid_argument("canonical_code: requires 3 | m and 3 | (l - h)");
  if (p.m * p.l > 1000000)
    throw std::invalid_argument("gamma params: vertex count exceeds 10^6");
  const long long b = std::gcd(p.l - p.h, p.m);  // gcd(0, m) = m
  std::vector<std::vector<GammaCoord>> parts;
  for (long long r = 0; r < b / 3; ++r) {
    std::set<GammaCoord> part;
    // m*l is a period of j -> normalize(3r+j, j), so [m*l] covers the orbit.
    for (long long j = 0; j < p.m * p.l; ++j)
      part.insert(normalize(p, 3 * r + j, j));
    parts.emplace_back(part.begin(), part.end());
  }
  return parts;
}

std::vector<GammaCoord> canonical_code(const GammaParams& p) {
  std::set<GammaCoord> all;
  for (const auto& part : canonical_code_parts(p)) all.insert(part.begin(), part.end());
  return {all.begin(), all.end()};
}

std::vector<int> code_vertices(const GammaDigraph& gd, const std::vector<GammaCoord>& coords) {
  std::vector<int> out;
  out.reserve(coords.size());
  for (const auto& [a, b] : coords) out.push_back(gd.vertex_of(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

CayleyRealization realize_as_cayley(const GammaParams& p) {
  if (p.m < 1 || p.l < 1 || p.h < 0 || p.h >= p.m)
    throw std::invalid_argument("gamma params: need m >= 1, l >= 1, 0 <= h < m");
  if (p.m * p.l > 1000000)
    throw std::invalid_argument("gamma params: vertex count exceeds 10^6");

  // Relations m*s = 0 and h*s + l*s' = 0; the quotient Z^2 / <(m,0),(h,l)>
  // is read off the Smith form, and coefficient rows are pushed through the
  // right transform to land in invariant-factor coordinates.
  Snf2x2 snf = snf_2x2(Mat2{p.m, 0, p.h, p.l});
  std::vector<int> factors;
  if (snf.d1 > 1) factors.push_back(static_cast<int>(snf.d1));
  if (snf.d2 > 1) factors.push_back(static_cast<int>(snf.d2));

  CayleyRealization out;
  out.group = AbelianGroup(factors);
  auto image = [&](long long x, long long y) {
    std::vector<int> coords;
    long long c1 = mod_reduce(x * snf.right.a + y * snf.right.c, snf.d1);
    long long c2 = mod_reduce(x * snf.right.b + y * snf.right.d, snf.d2);
    if (snf.d1 > 1) coords.push_back(static_cast<int>(c1));
    if (snf.d2 > 1) coords.push_back(static_cast<int>(c2));
    return out.group.element(std::move(coords));
  };
  GroupElement s = image(1, 0);
  GroupElement s_prime = image(0, 1);
  out.gens = GenPair{s, s_prime};

  const GroupElement zero = out.group.identity();
  out.order_of_s = out.group.order_of(s);
  if (s_prime == zero) {
    out.minimal_l = 1;  // 1*s' = 0 lies in <s>
  } else {
    std::set<GroupElement> span_s;
    for (const auto& e : out.group.cyclic_subgroup(s)) span_s.insert(e);
    GroupElement t = s_prime;
    out.minimal_l = 1;
    while (span_s.count(t) == 0) {
      t = out.group.add(t, s_prime);
      ++out.minimal_l;
    }
  }

  if (out.order_of_s != p.m || out.minimal_l != p.l) return out;
  if (s == zero || s_prime == zero || s == s_prime) return out;

  // Arc-verified natural map (a, b) -> a*s + b*s'.
  GammaDigraph gd = build_gamma(p);
  CayleyDigraph cd = build_cayley(out.group, out.gens);
  std::vector<int> map(static_cast<std::size_t>(p.m * p.l));
  GroupElement row = zero;
  for (long long a = 0; a < p.m; ++a) {
    GroupElement t = row;
    for (long long b = 0; b < p.l; ++b) {
      map[static_cast<std::size_t>(a * p.l + b)] = cd.vertex_of(t);
      t = out.group.add(t, s_prime);
    }
    row = out.group.add(row, s);
  }
  if (!verify_isomorphism(gd.digraph(), cd.digraph(), map))
    throw std::logic_error("realize_as_cayley: natural map failed arc verification");
  out.proper = true;
  out.vertex_map = std::move(map);
  return out;
}

}  // namespace caycodes
