#pragma once

// Test-only oracles. These deliberately avoid the library paths they
// cross-check: invariant factors come from a coset BFS rather than the Smith
// form, subgroup generation from a closure walk rather than the coordinate
// image, and perfect codes from subset exhaustion rather than the
// exact-cover search.

#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "caycodes/abelian.hpp"
#include "caycodes/digraph.hpp"

namespace testoracle {

// Invariant factors (d1, d2) of Z^2 modulo the row lattice of
// [[a, b], [c, d]]. The quotient is (Z_D)^2 / H with D = |det| and H the
// subgroup generated by the rows mod D; d2 is its exponent, d1 = D / d2.
inline std::pair<long long, long long> quotient_invariants(long long a, long long b,
                                                           long long c, long long d) {
  const long long det = a * d - b * c;
  const long long D = std::llabs(det);
  auto reduce = [D](long long x) { return ((x % D) + D) % D; };
  std::set<std::pair<long long, long long>> H;
  std::vector<std::pair<long long, long long>> frontier{{0, 0}};
  H.insert({0, 0});
  const std::pair<long long, long long> gens[2] = {{reduce(a), reduce(b)},
                                                   {reduce(c), reduce(d)}};
  while (!frontier.empty()) {
    auto [x, y] = frontier.back();
    frontier.pop_back();
    for (const auto& [gx, gy] : gens) {
      std::pair<long long, long long> next{reduce(x + gx), reduce(y + gy)};
      if (H.insert(next).second) frontier.push_back(next);
    }
  }
  long long exponent = 1;
  for (long long x = 0; x < D; ++x) {
    for (long long y = 0; y < D; ++y) {
      long long k = 1;
      while (H.count({reduce(k * x), reduce(k * y)}) == 0) ++k;
      if (k > exponent) exponent = k;
    }
  }
  return {D / exponent, exponent};
}

inline long long partition_count_rec(int left, int max_part) {
  if (left == 0) return 1;
  long long total = 0;
  for (int p = std::min(left, max_part); p >= 1; --p)
    total += partition_count_rec(left - p, p);
  return total;
}

inline long long partition_count(int n) { return partition_count_rec(n, n); }

// Subgroup closure by a walk from the identity along +s and +s' steps; in a
// finite group the reachable set is exactly <s, s'>.
inline bool generates_by_closure(const caycodes::AbelianGroup& g,
                                 const caycodes::GroupElement& s,
                                 const caycodes::GroupElement& s_prime) {
  std::set<caycodes::GroupElement> seen{g.identity()};
  std::vector<caycodes::GroupElement> frontier{g.identity()};
  while (!frontier.empty()) {
    caycodes::GroupElement e = frontier.back();
    frontier.pop_back();
    for (const auto& step : {s, s_prime}) {
      caycodes::GroupElement next = g.add(e, step);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return static_cast<long long>(seen.size()) == g.order();
}

inline long long element_order_by_iteration(const caycodes::AbelianGroup& g,
                                            const caycodes::GroupElement& e) {
  caycodes::GroupElement t = e;
  long long n = 1;
  while (!(t == g.identity())) {
    t = g.add(t, e);
    ++n;
  }
  return n;
}

// All perfect codes by checking every vertex subset against the domination
// definition, counting dominators straight off the arcs. Usable up to ~16
// vertices.
inline std::vector<std::vector<int>> codes_by_subsets(const caycodes::Digraph& d) {
  const int n = d.vertex_count();
  std::vector<std::vector<int>> found;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::vector<int> dominated(n, 0);
    for (int u = 0; u < n; ++u) {
      if (!(mask >> u & 1)) continue;
      ++dominated[u];
      for (int w = 0; w < n; ++w)
        if (d.has_arc(u, w)) ++dominated[w];
    }
    bool perfect = true;
    for (int v = 0; v < n; ++v)
      if (dominated[v] != 1) {
        perfect = false;
        break;
      }
    if (perfect) {
      std::vector<int> code;
      for (int u = 0; u < n; ++u)
        if (mask >> u & 1) code.push_back(u);
      found.push_back(std::move(code));
    }
  }
  return found;
}

}  // namespace testoracle
