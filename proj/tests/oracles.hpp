#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qforms/rational.hpp"

// Independent slow reference implementations; nothing here calls into the library.
namespace oracle {

using qforms::Rational;

inline std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> d;
  for (int64_t k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

inline std::vector<std::pair<int64_t, int>> factor(int64_t n) {
  std::vector<std::pair<int64_t, int>> f;
  for (int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline int moebius(int64_t n) {
  int m = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

inline int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline bool is_nu_power(int64_t n, int nu) {
  for (int64_t r = 1; ipow(r, nu) <= n; ++r)
    if (ipow(r, nu) == n) return true;
  return false;
}

inline int64_t totient(int64_t n) {
  int64_t c = 0;
  for (int64_t k = 1; k <= n; ++k) {
    int64_t a = k, b = n;
    while (b) {
      int64_t t = a % b;
      a = b;
      b = t;
    }
    c += a == 1;
  }
  return c;
}

// Number of (x, y) in Z^2 with x^2 + y^2 = n.
inline int64_t lattice2(int64_t n) {
  int64_t c = 0;
  for (int64_t x = -n; x <= n; ++x) {
    if (x * x > n) continue;
    for (int64_t y = -n; y <= n; ++y)
      if (x * x + y * y == n) ++c;
  }
  return c;
}

// Number of (x, y) in Z^2 with A x^2 + B y^2 = n.
inline int64_t lattice_ab(int64_t A, int64_t B, int64_t n) {
  int64_t c = 0;
  for (int64_t x = 0; A * x * x <= n; ++x)
    for (int64_t y = 0; A * x * x + B * y * y <= n; ++y)
      if (A * x * x + B * y * y == n) c += (x ? 2 : 1) * (y ? 2 : 1);
  return c;
}

inline bool exact_cube(int64_t v, int64_t& r) {
  int64_t s = v < 0 ? -1 : 1, a = v < 0 ? -v : v;
  int64_t k = 0;
  while ((k + 1) * (k + 1) * (k + 1) <= a) ++k;
  if (k * k * k != a) return false;
  r = s * k;
  return true;
}

// Ordered integer pairs with x^3 + y^3 = n, n >= 1.
inline int64_t cube_pairs_signed(int64_t n) {
  int64_t c = 0, B = 1;
  while (3 * B * B <= 4 * n) ++B;
  for (int64_t x = -B; x <= B; ++x) {
    int64_t y;
    if (exact_cube(n - x * x * x, y)) ++c;
  }
  return c;
}

// Ordered positive pairs with A x^k + B y^k = n.
inline int64_t power_pairs_pos(int64_t A, int64_t B, int k, int64_t n) {
  int64_t c = 0;
  for (int64_t x = 1; A * ipow(x, k) < n; ++x)
    for (int64_t y = 1; A * ipow(x, k) + B * ipow(y, k) <= n; ++y)
      if (A * ipow(x, k) + B * ipow(y, k) == n) ++c;
  return c;
}

// Ordered nonnegative pairs with x^k + y^k = n.
inline int64_t power_pairs_nonneg(int k, int64_t n) {
  int64_t c = 0;
  for (int64_t x = 0; ipow(x, k) <= n; ++x)
    for (int64_t y = 0; ipow(x, k) + ipow(y, k) <= n; ++y)
      if (ipow(x, k) + ipow(y, k) == n) ++c;
  return c;
}

// Dense exact polynomial product truncated below prec.
inline std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, size_t prec) {
  std::vector<Rational> c(prec);
  for (size_t i = 0; i < a.size() && i < prec; ++i)
    for (size_t j = 0; j < b.size() && i + j < prec; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Number of partitions of n by dynamic programming over parts.
inline std::vector<qforms::BigInt> partitions(int64_t N) {
  std::vector<qforms::BigInt> p(N, 0);
  p[0] = 1;
  for (int64_t k = 1; k < N; ++k)
    for (int64_t n = k; n < N; ++n) p[n] += p[n - k];
  return p;
}

// Number of x in [0, n) with x^2 = a mod n.
inline int64_t sqrt_count(int64_t a, int64_t n) {
  int64_t c = 0;
  for (int64_t x = 0; x < n; ++x)
    if ((((x * x - a) % n) + n) % n == 0) ++c;
  return c;
}

// Legendre symbol by Euler's criterion for an odd prime p.
inline int legendre(int64_t a, int64_t p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  int64_t r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// Jacobi symbol as the product of Legendre symbols over the factorization of k.
inline int jacobi(int64_t n, int64_t k) {
  int s = 1;
  for (auto [p, e] : factor(k))
    for (int i = 0; i < e; ++i) s *= legendre(n, p);
  return s;
}

}  // namespace oracle
