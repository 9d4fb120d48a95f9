#pragma once

#include <vector>

#include "caycodes/abelian.hpp"
#include "caycodes/digraph.hpp"

namespace caycodes {

// Cay(G, {s, s'}): vertices are the group elements in index order and
// (x, y) is an arc exactly when y - x is s or s'. With a generating pair the
// digraph is 2-valent and strongly connected.
class CayleyDigraph {
 public:
  CayleyDigraph(AbelianGroup group, GenPair gens);

  const AbelianGroup& group() const { return group_; }
  const GenPair& gens() const { return gens_; }
  const Digraph& digraph() const { return digraph_; }

  int vertex_of(const GroupElement& e) const;
  GroupElement element_of(int v) const;

  // i*s + j*s' for any integers i, j; the first coordinate is periodic with
  // the order of s, the second with the order of s'.
  GroupElement xcoord(long long i, long long j) const;
  int xcoord_vertex(long long i, long long j) const;

 private:
  AbelianGroup group_;
  GenPair gens_;
  Digraph digraph_;
};

CayleyDigraph build_cayley(const AbelianGroup& group, const GenPair& gens);

// Structural parameters of one ordered assignment (s, s') of a generating
// pair: m is the order of s, l the least positive integer with l*s' in <s>,
// and h the unique element of [m] with h*s + l*s' = 0. Always m*l = |G|.
struct AssignmentParams {
  long long m = 0, l = 0, h = 0;
  GenPair assignment;
};

AssignmentParams extract_params(const CayleyDigraph& c, const GenPair& assignment);

// The map (a, b) in Z_m x [l] |-> a*s + b*s', indexed a*l + b, onto c's
// vertices. Throws if it fails to be a bijection, which indicates a bug.
std::vector<int> natural_map(const CayleyDigraph& c, const AssignmentParams& p);

}  // namespace caycodes
