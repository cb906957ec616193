#include "qforms/residues.hpp"

#include <numeric>

#include "qforms/arith.hpp"
#include "qforms/errors.hpp"

namespace qforms {

namespace {

int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool represents(int64_t a, int64_t b, int64_t n, int64_t* wx = nullptr, int64_t* wy = nullptr) {
  for (int64_t x = 0; a * x * x <= n; ++x) {
    int64_t rest = n - a * x * x;
    if (rest % b != 0) continue;
    if (is_square(rest / b)) {
      if (wx) *wx = x;
      if (wy) *wy = isqrt(rest / b);
      return true;
    }
  }
  return false;
}

}  // namespace

int64_t res_rule(int64_t n) {
  int64_t r = 0;
  int u = 0;
  for (auto [p, e] : factor(n)) {
    if (p == 2)
      u = e >= 3 ? 2 : e == 2 ? 1 : 0;
    else
      ++r;
  }
  return int64_t{1} << (r + u);
}

int64_t res_count(int64_t a, int64_t n) {
  if (n < 2) throw InvalidArgument("res_count needs n >= 2");
  const int64_t am = mod_floor(a, n);
  int64_t c = 0;
  for (int64_t x = 0; x < n; ++x)
    if (static_cast<int64_t>(static_cast<__int128>(x) * x % n) == am) ++c;
  if (c != 0 && std::gcd(am, n) == 1 && c != res_rule(n))
    throw CrossCheckFailed("res_count(" + std::to_string(a) + ", " + std::to_string(n) + ") = " + std::to_string(c) +
                           " disagrees with 2^(r+u) = " + std::to_string(res_rule(n)));
  return c;
}

int64_t th75_rule(int64_t p, int64_t q) {
  int s = jacobi_symbol(mod_floor(-p, q), q);
  return s >= 0 ? 2 * (q - 1) : 0;
}

int64_t th75_count(int64_t p, int64_t q) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (!is_prime(q) || q == 2) throw InvalidArgument("q must be an odd prime");
  int64_t c = 0;
  for (int64_t x = 0; x < q; ++x)
    for (int64_t y = 1; y < q; ++y)
      if ((x * x + p * y * y) % q == 0) ++c;
  if (p != q && c != th75_rule(p, q))
    throw CrossCheckFailed("th75 scan " + std::to_string(c) + " != 2c(p,q)(q-1) = " + std::to_string(th75_rule(p, q)));
  return c;
}

ImpossibilityResult impossibility_check(int64_t a, int64_t b, int64_t n) {
  if (a < 1 || b < 1 || n < 1) throw HypothesisViolated("a, b, n must be positive");
  if (n % 2 == 0 || n % 5 == 0 || n % 17 == 0) throw HypothesisViolated("n must be coprime to 2, 5 and 17");
  ImpossibilityResult r;
  r.symbol = jacobi_symbol(mod_floor(-a * b, n), n);
  if (r.symbol != -1)
    throw HypothesisViolated("(-ab|n) = " + std::to_string(r.symbol) + ", the check needs -1");
  r.counterexample = represents(a, b, n, &r.x, &r.y);
  return r;
}

ResidueClassification th78_classify(int64_t t) {
  if (t < 3 || t % 4 != 3 || !is_prime(t)) throw BadModulus("t must be a prime with t = 3 mod 4");
  ResidueClassification rc;
  rc.t = t;
  for (int64_t n = 1; n <= t; ++n) {
    int s = kronecker_symbol(-t, n);
    if (s == 1) {
      rc.S1.push_back(n);
      (represents(1, t, n) ? rc.S11 : rc.S12).push_back(n);
    } else if (s == -1) {
      rc.Sm1.push_back(n);
    } else {
      rc.S0.push_back(n);
    }
  }
  return rc;
}

}  // namespace qforms
