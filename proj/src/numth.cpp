#include "caycodes/numth.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace caycodes {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(long long n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  long long rest = n;
  for (long long p = 2; p * p <= rest; p += (p == 2) ? 1 : 2) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> ps;
  for (const auto& pp : factorize(n).factors) ps.push_back(pp.prime);
  return ps;
}

Valuation padic_valuation(long long p, long long n) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
  if (n == 0) return Valuation::infinite();
  long long a = std::llabs(n);
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return Valuation::of(v);
}

DivMod euclid_divmod(long long j, long long l) {
  if (l <= 0) throw std::invalid_argument("euclid_divmod: l must be positive");
  long long q = j / l;
  long long r = j % l;
  if (r < 0) {
    r += l;
    q -= 1;
  }
  return {q, r};
}

long long mod_reduce(long long x, long long m) {
  return euclid_divmod(x, m).remainder;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

namespace {

void swap_rows(Mat2& m) {
  std::swap(m.a, m.c);
  std::swap(m.b, m.d);
}

void swap_cols(Mat2& m) {
  std::swap(m.a, m.b);
  std::swap(m.c, m.d);
}

}  // namespace

Snf2x2 snf_2x2(const Mat2& m) {
  if (m.det() == 0) throw std::invalid_argument("snf_2x2: matrix is singular");

  Mat2 a = m;
  Mat2 left{1, 0, 0, 1};
  Mat2 right{1, 0, 0, 1};

  // Row op r2 -= q*r1 is premultiplication, col op c2 -= q*c1 is
  // postmultiplication; every op below is mirrored into left/right.
  auto row_sub = [&](long long q) {  // r2 -= q * r1
    a.c -= q * a.a;
    a.d -= q * a.b;
    left.c -= q * left.a;
    left.d -= q * left.b;
  };
  auto col_sub = [&](long long q) {  // c2 -= q * c1
    a.b -= q * a.a;
    a.d -= q * a.c;
    right.b -= q * right.a;
    right.d -= q * right.c;
  };

  while (true) {
    // Pivot a nonzero entry of minimal magnitude into the (0,0) slot.
    while (a.b != 0 || a.c != 0) {
      if (a.c != 0) {
        if (a.a == 0 || std::llabs(a.c) < std::llabs(a.a)) {
          swap_rows(a);
          swap_rows(left);
          continue;
        }
        row_sub(a.c / a.a);
        continue;
      }
      if (a.a == 0 || std::llabs(a.b) < std::llabs(a.a)) {
        swap_cols(a);
        swap_cols(right);
        continue;
      }
      col_sub(a.b / a.a);
    }
    if (a.d % a.a == 0) break;
    // Fold the second diagonal entry back in so the pivot becomes the gcd.
    a.b = a.d;
    left.a += left.c;
    left.b += left.d;
  }

  if (a.a < 0) {
    a.a = -a.a;
    a.b = -a.b;
    left.a = -left.a;
    left.b = -left.b;
  }
  if (a.d < 0) {
    a.d = -a.d;
    right.b = -right.b;
    right.d = -right.d;
  }

  Snf2x2 out;
  out.input = m;
  out.d1 = a.a;
  out.d2 = a.d;
  out.left = left;
  out.right = right;

  Mat2 check = left * m * right;
  bool ok = check == Mat2{out.d1, 0, 0, out.d2} && out.d1 > 0 &&
            out.d2 % out.d1 == 0 && std::llabs(left.det()) == 1 &&
            std::llabs(right.det()) == 1 &&
            out.d1 * out.d2 == std::llabs(m.det());
  if (!ok) throw std::logic_error("snf_2x2: self-check failed");
  return out;
}

}  // namespace caycodes
