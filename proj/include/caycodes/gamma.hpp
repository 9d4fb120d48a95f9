#pragma once

#include <utility>
#include <vector>

#include "caycodes/abelian.hpp"
#include "caycodes/cayley.hpp"
#include "caycodes/digraph.hpp"

namespace caycodes {

// Parameters of the gamma family: vertices Z_m x [l], row arcs
// (a,b) -> (a+1,b), column arcs (a,c) -> (a,c+1) for c < l-1, and wrap arcs
// (a,l-1) -> (a-h,0). Requires m >= 1, l >= 1, 0 <= h < m.
struct GammaParams {
  long long m = 0, l = 0, h = 0;
  bool operator==(const GammaParams&) const = default;
};

// Degenerate parameters produce a loop (l = 1, h = 0; or m = 1) or a
// duplicate arc (l = 1, h = m-1) and are rejected by the builder.
bool is_degenerate(const GammaParams& p);
void validate_params(const GammaParams& p);

class GammaDigraph {
 public:
  explicit GammaDigraph(const GammaParams& p);

  const GammaParams& params() const { return params_; }
  const Digraph& digraph() const { return digraph_; }

  int vertex_of(long long a, long long b) const;
  std::pair<long long, long long> coord_of(int v) const;

 private:
  GammaParams params_;
  Digraph digraph_;
};

GammaDigraph build_gamma(const GammaParams& p);

// Coordinate normalization: any integer pair (i, j) denotes the vertex
// ((i - n*h) mod m, r) where j = n*l + r with r in [l].
std::pair<long long, long long> normalize(const GammaParams& p, long long i, long long j);

struct ConditionReport {
  bool div3_m = false;         // 3 | m
  bool div3_lh = false;        // 3 | (l - h)
  bool sigma_ok = false;       // valuation condition over all primes of m*l
  bool admits_code = false;    // div3_m && div3_lh
  bool cayley_abelian = false; // sigma_ok
  bool operator==(const ConditionReport&) const = default;
};

// Arithmetic conditions on (m, l, h): divisibility flags and, for every
// prime p of m*l, sigma_p(gcd(m,h)) in {sigma_p(m), sigma_p(m-h)} with
// gcd(m,0) = m.
ConditionReport check_conditions(const GammaParams& p);

using GammaCoord = std::pair<long long, long long>;

// The canonical code split by residue class r in [gcd(l-h,m)/3]: part r is
// the normalized orbit {(3r+j, j) | j in Z}, each of size m*l/gcd(l-h,m).
// Requires 3 | m and 3 | (l-h).
std::vector<std::vector<GammaCoord>> canonical_code_parts(const GammaParams& p);
// Union of the parts; sorted, size m*l/3.
std::vector<GammaCoord> canonical_code(const GammaParams& p);

// Vertex indices of coordinate list in the built digraph, sorted.
std::vector<int> code_vertices(const GammaDigraph& gd, const std::vector<GammaCoord>& coords);

// Realization of the gamma digraph as a concrete Cayley digraph: the group
// is Z^2 modulo the relation lattice spanned by (m, 0) and (h, l), computed
// by Smith normal form, with the generators the images of the basis vectors.
// proper is false when the natural presentation fails (order of s not m, the
// minimal l mismatched, or a degenerate generator pair); diagnostics are
// filled either way.
struct CayleyRealization {
  bool proper = false;
  AbelianGroup group;
  GenPair gens;
  std::vector<int> vertex_map;  // gamma vertex a*l+b -> cayley vertex; empty if improper
  long long order_of_s = 0;
  long long minimal_l = 0;
};

CayleyRealization realize_as_cayley(const GammaParams& p);

}  // namespace caycodes
