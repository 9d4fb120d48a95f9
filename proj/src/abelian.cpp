#include "caycodes/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "caycodes/numth.hpp"

namespace caycodes {

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw std::invalid_argument("AbelianGroup: invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument(
          "AbelianGroup: invariant factors must form a divisibility chain");
  }
}

long long AbelianGroup::order() const {
  long long n = 1;
  for (int d : factors_) n *= d;
  return n;
}

GroupElement AbelianGroup::identity() const {
  return GroupElement{std::vector<int>(factors_.size(), 0)};
}

void AbelianGroup::check(const GroupElement& e) const {
  if (e.coords.size() != factors_.size())
    throw std::invalid_argument("element does not belong to this group (arity mismatch)");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (e.coords[i] < 0 || e.coords[i] >= factors_[i])
      throw std::invalid_argument("element does not belong to this group (coordinate out of range)");
  }
}

GroupElement AbelianGroup::element(std::vector<int> coords) const {
  GroupElement e{std::move(coords)};
  check(e);
  return e;
}

GroupElement AbelianGroup::element_at(long long index) const {
  if (index < 0 || index >= order())
    throw std::out_of_range("element_at: index out of range");
  std::vector<int> coords(factors_.size(), 0);
  for (int i = rank() - 1; i >= 0; --i) {
    coords[i] = static_cast<int>(index % factors_[i]);
    index /= factors_[i];
  }
  return GroupElement{std::move(coords)};
}

long long AbelianGroup::index_of(const GroupElement& e) const {
  check(e);
  long long index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    index = index * factors_[i] + e.coords[i];
  return index;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (long long i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement c{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int s = a.coords[i] + b.coords[i];
    if (s >= factors_[i]) s -= factors_[i];
    c.coords[i] = s;
  }
  return c;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  check(a);
  GroupElement c{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i)
    c.coords[i] = a.coords[i] == 0 ? 0 : factors_[i] - a.coords[i];
  return c;
}

GroupElement AbelianGroup::scalar_mul(long long n, const GroupElement& a) const {
  check(a);
  GroupElement c{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long long k = mod_reduce(n, factors_[i]);
    c.coords[i] = static_cast<int>((k * a.coords[i]) % factors_[i]);
  }
  return c;
}

long long AbelianGroup::order_of(const GroupElement& a) const {
  check(a);
  long long o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long long oi = factors_[i] / std::gcd<long long>(factors_[i], a.coords[i]);
    o = std::lcm(o, oi);
  }
  return o;
}

std::vector<GroupElement> AbelianGroup::cyclic_subgroup(const GroupElement& a) const {
  long long o = order_of(a);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(o));
  GroupElement t = identity();
  for (long long n = 0; n < o; ++n) {
    out.push_back(t);
    t = add(t, a);
  }
  return out;
}

bool AbelianGroup::generates(const GroupElement& s, const GroupElement& s_prime) const {
  const long long n = order();
  std::set<GroupElement> seen;
  GroupElement row = identity();
  const long long os = order_of(s);
  const long long osp = order_of(s_prime);
  for (long long i = 0; i < os; ++i) {
    GroupElement t = row;
    for (long long j = 0; j < osp; ++j) {
      seen.insert(t);
      if (static_cast<long long>(seen.size()) == n) return true;
      t = add(t, s_prime);
    }
    row = add(row, s);
  }
  return static_cast<long long>(seen.size()) == n;
}

std::string AbelianGroup::format(const GroupElement& e) const {
  check(e);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) os << ',';
    os << e.coords[i];
  }
  os << ')';
  return os.str();
}

std::string AbelianGroup::spec() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ',';
    os << factors_[i];
  }
  return os.str();
}

GenPair swapped(const GenPair& p) { return GenPair{p.s_prime, p.s}; }

namespace {

std::vector<long long> parse_int_list(const std::string& text, char sep) {
  std::vector<long long> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    std::size_t first = item.find_first_not_of(" \t");
    std::size_t last = item.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("empty entry in list: '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
  return out;
}

}  // namespace

AbelianGroup parse_group_spec(const std::string& text) {
  std::vector<int> factors;
  for (long long v : parse_int_list(text, ',')) {
    if (v < 2 || v > 1000000)
      throw std::invalid_argument("group spec: invariant factors must be in [2, 10^6]");
    factors.push_back(static_cast<int>(v));
  }
  return AbelianGroup(std::move(factors));
}

GroupElement parse_element(const AbelianGroup& g, const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first == std::string::npos)
    throw std::invalid_argument("empty element spec");
  std::string body = text.substr(first, last - first + 1);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw std::invalid_argument("element spec must look like (1,4): '" + text + "'");
  body = body.substr(1, body.size() - 2);
  std::vector<int> coords;
  for (long long v : parse_int_list(body, ',')) coords.push_back(static_cast<int>(v));
  return g.element(std::move(coords));
}

namespace {

// Partitions of e into weakly decreasing positive parts, in lexicographically
// decreasing order: [e], [e-1,1], ..., [1,...,1].
void partitions_rec(int e, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(e, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(e - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(e, e, cur, out);
  return out;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

std::vector<AbelianGroup> enumerate_groups(long long n) {
  if (n <= 0) throw std::invalid_argument("enumerate_groups: n must be positive");
  if (n == 1) return {AbelianGroup()};
  Factorization f = factorize(n);
  std::vector<std::vector<std::vector<int>>> choices;  // per prime
  for (const auto& pp : f.factors) choices.push_back(partitions(pp.exponent));

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::size_t slots = 0;
    for (std::size_t i = 0; i < choices.size(); ++i)
      slots = std::max(slots, choices[i][pick[i]].size());
    // Slot 0 collects the largest part of every prime, so consecutive slots
    // divide each other; reversing gives the ascending invariant-factor chain.
    std::vector<int> factors(slots, 1);
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& parts = choices[i][pick[i]];
      for (std::size_t t = 0; t < parts.size(); ++t)
        factors[t] = static_cast<int>(factors[t] * ipow(f.factors[i].prime, parts[t]));
    }
    std::reverse(factors.begin(), factors.end());
    out.push_back(AbelianGroup(std::move(factors)));

    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<GenPair> enumerate_genpairs(const AbelianGroup& g) {
  std::vector<GenPair> out;
  const auto elems = g.elements();
  const GroupElement zero = g.identity();
  for (const auto& s : elems) {
    if (s == zero) continue;
    for (const auto& sp : elems) {
      if (sp == zero || sp == s) continue;
      if (g.generates(s, sp)) out.push_back(GenPair{s, sp});
    }
  }
  return out;
}

}  // namespace caycodes
