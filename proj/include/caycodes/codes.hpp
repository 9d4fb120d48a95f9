#pragma once

#include <optional>
#include <vector>

#include "caycodes/cayley.hpp"
#include "caycodes/digraph.hpp"

namespace caycodes {

enum class Verdict { unverified, perfect, failed };

// A vertex subset of a host digraph together with its verification verdict.
// When failed, witness is the first vertex (in index order) dominated zero
// or at least two times.
struct CodeSet {
  std::vector<int> vertices;  // sorted ascending
  Verdict verdict = Verdict::unverified;
  int witness = -1;
  bool operator==(const CodeSet&) const = default;
};

// Checks the defining property directly: every vertex dominated by exactly
// one member of the candidate set, where u dominates v iff u = v or (u, v)
// is an arc.
CodeSet verify_code(const Digraph& d, std::vector<int> candidate);

// Exact-cover encoding of the domination relation: choosing vertex v covers
// its closed out-neighborhood candidates[v] = {v} union N+(v).
struct CoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> candidates;  // sorted per vertex
};

CoverInstance build_cover_instance(const Digraph& d);

struct EnumerateOptions {
  std::optional<int> require_vertex;  // only codes containing this vertex
  bool early_exit = false;            // stop after the first code found
  int size_cap = 200;                 // reject larger instances
};

// All perfect codes of d, by exact-cover backtracking: repeatedly pick the
// uncovered vertex with the fewest remaining dominators and branch on them.
// Output is deterministic: each code sorted, codes ordered lexicographically.
// Every returned CodeSet carries a perfect verdict.
std::vector<CodeSet> enumerate_codes(const Digraph& d,
                                     const EnumerateOptions& options = {});

// The identity-containing code predicted for an assignment with parameters
// (m, l, h): the union over i in [gcd(l-h,m)/3] of {(3i+r)s + rs' | r in Z},
// verified against the digraph before returning. Requires 3 | m, 3 | (l-h).
CodeSet identity_code_family(const CayleyDigraph& c, const AssignmentParams& p);

// Structural facts that hold for every perfect code of a 2-valent abelian
// Cayley digraph; checked directly on a verified code.
struct LemmaReport {
  bool no_involution = false;       // neither generator has order 2
  bool diagonal_closed = false;     // g in C implies g + s + s' in C
  bool spacing_ok = false;          // g+s, g+2s, g+s', g+2s' out; g+3s, g+3s' in
  bool wrap_offset_div3 = false;    // 3 | (l - h) for both assignments
  bool all() const {
    return no_involution && diagonal_closed && spacing_ok && wrap_offset_div3;
  }
};

LemmaReport check_lemmas(const CayleyDigraph& c, const CodeSet& code);

}  // namespace caycodes
