#pragma once

#include <stdexcept>
#include <vector>

namespace caycodes {

struct PrimePower {
  long long prime = 0;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization of a positive integer, primes strictly increasing.
// n = 1 carries an empty factor list.
struct Factorization {
  long long n = 1;
  std::vector<PrimePower> factors;
};

bool is_prime(long long n);
Factorization factorize(long long n);

// The set of prime divisors of n, ascending. n must be positive.
std::vector<long long> prime_divisors(long long n);

// p-adic valuation value; every power of p divides 0, so the valuation of 0
// is a distinguished infinite value equal only to itself.
class Valuation {
 public:
  static Valuation infinite() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }
  static Valuation of(int value) {
    Valuation v;
    v.value_ = value;
    return v;
  }
  bool is_infinite() const { return infinite_; }
  int value() const {
    if (infinite_) throw std::logic_error("valuation is infinite");
    return value_;
  }
  bool operator==(const Valuation&) const = default;

 private:
  bool infinite_ = false;
  int value_ = 0;
};

// Largest i with p^i dividing n (valuation of |n| for negative n).
// p must be prime.
Valuation padic_valuation(long long p, long long n);

struct DivMod {
  long long quotient = 0;
  long long remainder = 0;
  bool operator==(const DivMod&) const = default;
};

// Floor division: j = quotient*l + remainder with 0 <= remainder < l.
// Requires l >= 1; holds for negative j as well.
DivMod euclid_divmod(long long j, long long l);

// Representative of x mod m in [0, m). Requires m >= 1.
long long mod_reduce(long long x, long long m);

// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
  long long a = 0, b = 0, c = 0, d = 0;
  long long det() const { return a * d - b * c; }
  bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);

// Smith normal form of a nonsingular 2x2 integer matrix:
// left * input * right = diag(d1, d2) with d1 | d2 and |det(left)| =
// |det(right)| = 1. d1 is the gcd of the entries and d1*d2 = |det(input)|.
struct Snf2x2 {
  Mat2 input;
  long long d1 = 0, d2 = 0;
  Mat2 left, right;
};

Snf2x2 snf_2x2(const Mat2& m);

}  // namespace caycodes
