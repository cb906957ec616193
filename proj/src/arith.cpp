#include "qforms/arith.hpp"

#include <algorithm>
#include <numeric>

#include "qforms/errors.hpp"

namespace qforms {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

int parity_sign(int64_t v) { return (v % 2 == 0) ? 1 : -1; }

}  // namespace

bool is_prime(int64_t n) { return n >= 2 && miller_rabin(static_cast<u64>(n)); }

Factorization factor(int64_t n) {
  if (n < 1) throw InvalidArgument("factor needs n >= 1");
  std::vector<u64> primes;
  u64 m = static_cast<u64>(n);
  for (u64 p = 2; p < 1000 && p * p <= m; ++p) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  factor_rec(m, primes);
  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (u64 p : primes) {
    if (!f.empty() && f.back().first == static_cast<int64_t>(p))
      ++f.back().second;
    else
      f.emplace_back(static_cast<int64_t>(p), 1);
  }
  return f;
}

int64_t from_factorization(const Factorization& f) {
  int64_t n = 1;
  for (auto [p, e] : f)
    for (int i = 0; i < e; ++i) n *= p;
  return n;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> d{1};
  for (auto [p, e] : factor(n)) {
    size_t sz = d.size();
    int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) d.push_back(d[i] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

int moebius(int64_t n) {
  int s = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

int64_t totient(int64_t n) {
  int64_t r = n;
  for (auto [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

int64_t radical(int64_t n) {
  int64_t r = 1;
  for (auto [p, e] : factor(n)) r *= p;
  return r;
}

Rational sigma_nu(int64_t n, int64_t nu) {
  Rational s = 0;
  for (int64_t d : divisors(n)) s += rational_pow(Rational(int_from(d)), nu);
  return s;
}

int liouville(int64_t n) {
  if (n == 0) return 0;
  if (n < 0) n = -n;
  int omega = 0;
  for (auto [p, e] : factor(n)) omega += e;
  return parity_sign(omega);
}

int jacobi_symbol(int64_t n, int64_t k) {
  if (k <= 0 || k % 2 == 0) throw EvenModulus("Jacobi symbol needs an odd positive modulus, got " + std::to_string(k));
  int64_t a = n % k;
  if (a < 0) a += k;
  int64_t m = k;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int64_t r = m % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) t = -t;
    a %= m;
  }
  return m == 1 ? t : 0;
}

int jacobi_symbol(const Rational& r, int64_t k) {
  if (k <= 0 || k % 2 == 0) throw EvenModulus("Jacobi symbol needs an odd positive modulus, got " + std::to_string(k));
  if (!is_integer(r)) return 0;
  BigInt red;
  BigInt kk = int_from(k);
  mpz_fdiv_r(red.get_mpz_t(), r.get_num_mpz_t(), kk.get_mpz_t());
  return jacobi_symbol(to_int64(red), k);
}

int kronecker_symbol(int64_t a, int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int t = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) t = -t;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) t = -t;
  }
  if (n == 1) return t;
  return t * jacobi_symbol(a, n);
}

int64_t isqrt(int64_t n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative number");
  BigInt r = isqrt(int_from(n));
  return to_int64(r);
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

int64_t iroot(int64_t n, int k) {
  if (n < 0 || k < 1) throw InvalidArgument("iroot needs n >= 0, k >= 1");
  BigInt r;
  BigInt nn = int_from(n);
  mpz_root(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  return to_int64(r);
}

std::optional<int64_t> exact_root(int64_t n, int k) {
  if (k < 1) return std::nullopt;
  bool neg = n < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  int64_t a = neg ? -n : n;
  int64_t r = iroot(a, k);
  if (ipow_sat(r, k) != a) return std::nullopt;
  return neg ? -r : r;
}

bool is_square(int64_t n) { return n >= 0 && exact_root(n, 2).has_value(); }

__int128 ipow_sat(int64_t b, int e) {
  constexpr __int128 cap = static_cast<__int128>(1) << 100;
  __int128 r = 1;
  const __int128 ab = b < 0 ? -static_cast<__int128>(b) : b;
  for (int i = 0; i < e; ++i) {
    __int128 ar = r < 0 ? -r : r;
    if (ab != 0 && ar > cap / ab) return (r < 0) != (b < 0) ? -cap : cap;
    r *= b;
  }
  return r;
}

NuSplit nu_split(int64_t n, int nu) {
  if (n < 1 || nu < 2) throw InvalidArgument("nu_split needs n >= 1 and nu >= 2");
  NuSplit s;
  for (auto [p, a] : factor(n)) {
    int b = a / nu, k = a % nu;
    for (int i = 0; i < b; ++i) s.nu_part *= p;
    for (int i = 0; i < k; ++i) s.star_part *= p;
  }
  s.nu_part_is_trivial = s.nu_part == 1;
  s.n1 = s.nu_part;
  s.n2 = n / static_cast<int64_t>(ipow_sat(s.n1, nu));
  return s;
}

int lambda_nu(int64_t n, int nu) {
  int s = 0;
  for (int64_t d = 1;; ++d) {
    __int128 dn = ipow_sat(d, nu);
    if (dn > n) break;
    if (n % static_cast<int64_t>(dn) == 0) s += moebius(n / static_cast<int64_t>(dn));
  }
  return s;
}

int X_nu(int64_t n, int nu) { return exact_root(n, nu).has_value() ? 1 : 0; }

int mu_nu(int64_t n, int nu) {
  NuSplit s = nu_split(n, nu);
  return s.nu_part > 1 ? moebius(s.star_part) : 0;
}

int mu_star_nu(int64_t n, int nu) {
  NuSplit s = nu_split(n, nu);
  if (s.nu_part <= 1) return 0;
  return parity_sign(radical(s.nu_part)) * moebius(s.star_part);
}

namespace {

template <class Term>
Rational nu_divisor_sum(int64_t n, int nu, Term term) {
  Rational s = 0;
  for (int64_t d = 2;; ++d) {
    __int128 dn = ipow_sat(d, nu);
    if (dn > n) break;
    if (n % static_cast<int64_t>(dn) == 0) s += term(d, static_cast<int64_t>(dn));
  }
  return s;
}

}  // namespace

Rational c_nu(int64_t n, int nu) {
  Rational s = nu_divisor_sum(n, nu, [&](int64_t, int64_t dn) { return Rational(dn * moebius(n / dn)); });
  return s / n;
}

Rational Y_nu(int64_t n, int nu, const ArithSeq& chi) {
  Rational s = nu_divisor_sum(n, nu, [&](int64_t d, int64_t dn) {
    int m = moebius(n / dn);
    return m == 0 ? Rational(0) : Rational(chi(d) * dn * m);
  });
  return s / n;
}

Rational A_nu(int64_t n, int nu, const ArithSeq& chi) {
  return nu_divisor_sum(n, nu, [&](int64_t d, int64_t dn) {
    int m = moebius(n / dn);
    return m == 0 ? Rational(0) : Rational(chi(d) * m);
  });
}

Rational Y_nu_closed(int64_t n, int nu, const ArithSeq& chi) {
  NuSplit s = nu_split(n, nu);
  if (s.nu_part_is_trivial) return 0;
  int m = moebius(s.star_part);
  if (m == 0) return 0;
  return Rational(chi(s.nu_part) * make_rational(m, s.star_part));
}

Rational A_nu_closed(int64_t n, int nu, const ArithSeq& chi) {
  NuSplit s = nu_split(n, nu);
  if (s.nu_part_is_trivial) return 0;
  int m = moebius(s.star_part);
  return m == 0 ? Rational(0) : Rational(chi(s.nu_part) * m);
}

Rational A_star_nu(int64_t t, int nu, const ArithSeq& chi) {
  if (t == 0) return 0;
  Rational s = 0;
  for (int64_t d : divisors(t)) {
    NuSplit sp = nu_split(d, nu);
    int m = moebius(sp.n2);
    if (m != 0) s += chi(sp.n1) * m;
  }
  return s;
}

Rational h_a(int64_t n, int64_t a) {
  Rational s = 0;
  for (int64_t d : divisors(n)) {
    int m = moebius(n / d);
    if (m != 0) s += rational_pow(Rational(int_from(d)), a) * m;
  }
  return s;
}

int mu_k(int64_t n, int k) {
  int s = 0;
  for (int64_t d = 1;; ++d) {
    __int128 dk = ipow_sat(d, k);
    if (dk > n) break;
    if (n % static_cast<int64_t>(dk) == 0) s += moebius(d);
  }
  return s;
}

Rational mu_kv(int64_t n, int k, int64_t v) {
  Rational s = 0;
  for (int64_t d = 1;; ++d) {
    __int128 dk = ipow_sat(d, k);
    if (dk > n) break;
    if (n % static_cast<int64_t>(dk) == 0) {
      int m = moebius(d);
      if (m != 0) s += Rational(m) / rational_pow(Rational(int_from(d)), v);
    }
  }
  return s;
}

ArithSeq moebius_invert(const ArithSeq& f) {
  return ArithSeq("invert(" + f.id() + ")", [f](int64_t n) {
    Rational s = 0;
    for (int64_t d : divisors(n)) {
      int m = moebius(n / d);
      if (m != 0) s += f(d) * m;
    }
    return s;
  });
}

ArithSeq divisor_sum(const ArithSeq& f) {
  return ArithSeq("dsum(" + f.id() + ")", [f](int64_t n) {
    Rational s = 0;
    for (int64_t d : divisors(n)) s += f(d);
    return s;
  });
}

}  // namespace qforms
