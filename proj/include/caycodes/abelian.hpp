#pragma once

#include <string>
#include <vector>

namespace caycodes {

// Element of a finite abelian group: a residue tuple read against the
// invariant factors of the group an operation is performed in. Plain data;
// all arithmetic goes through AbelianGroup, which validates that the tuple
// belongs to it.
struct GroupElement {
  std::vector<int> coords;
  auto operator<=>(const GroupElement&) const = default;
};

// Finite abelian group in invariant-factor form: Z_{d1} x ... x Z_{dk} with
// 2 <= d1 | d2 | ... | dk. The empty factor list is the trivial group. One
// canonical representation per isomorphism class.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> invariant_factors);

  const std::vector<int>& invariant_factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  long long order() const;

  GroupElement identity() const;
  // Validates arity and coordinate ranges.
  GroupElement element(std::vector<int> coords) const;
  // Elements are indexed 0..order-1 in lexicographic coordinate order;
  // index 0 is the identity.
  GroupElement element_at(long long index) const;
  long long index_of(const GroupElement& e) const;
  std::vector<GroupElement> elements() const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scalar_mul(long long n, const GroupElement& a) const;

  // Least n >= 1 with n*a = 0; computed as lcm_i(d_i / gcd(d_i, c_i)).
  long long order_of(const GroupElement& a) const;
  // {n*a | 0 <= n < order_of(a)}, in generation order starting at identity.
  std::vector<GroupElement> cyclic_subgroup(const GroupElement& a) const;
  // Whether <s, s'> is the whole group, decided by enumerating the image of
  // (i, j) -> i*s + j*s'.
  bool generates(const GroupElement& s, const GroupElement& s_prime) const;

  // "(1,4)" style element text; "3,6" style group text.
  std::string format(const GroupElement& e) const;
  std::string spec() const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  void check(const GroupElement& e) const;
  std::vector<int> factors_;
};

// Ordered generating pair; the order fixes which element plays the first
// generator role when structural parameters are extracted.
struct GenPair {
  GroupElement s;
  GroupElement s_prime;
  bool operator==(const GenPair&) const = default;
};

GenPair swapped(const GenPair& p);

// Parses "3,6" (comma-separated invariant factors; empty string is rejected).
AbelianGroup parse_group_spec(const std::string& text);
// Parses "(1,4)" against the given group.
GroupElement parse_element(const AbelianGroup& g, const std::string& text);

// One representative per isomorphism class of abelian groups of order n,
// in a deterministic order (cyclic group first).
std::vector<AbelianGroup> enumerate_groups(long long n);

// All ordered pairs (s, s') of distinct nonzero elements with <s, s'> = G,
// in lexicographic coordinate order. Pairs containing involutions are kept.
std::vector<GenPair> enumerate_genpairs(const AbelianGroup& g);

}  // namespace caycodes
