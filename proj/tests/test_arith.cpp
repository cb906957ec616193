#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qforms/arith.hpp"
#include "qforms/errors.hpp"

using namespace qforms;

namespace {

Rational q(int64_t a, int64_t b = 1) { return make_rational(a, b); }

const ArithSeq& chi_one() {
  static ArithSeq s = chi_from_id("one");
  return s;
}

}  // namespace

TEST_CASE("factor") {
  CHECK(factor(1).empty());
  CHECK(factor(48) == Factorization{{2, 4}, {3, 1}});
  CHECK(factor(1729) == Factorization{{7, 1}, {13, 1}, {19, 1}});
  for (int64_t n = 1; n <= 3000; ++n) {
    CHECK(factor(n) == oracle::factor(n));
    CHECK(from_factorization(factor(n)) == n);
  }
  CHECK(factor(999999000001LL) == oracle::factor(999999000001LL));
}

TEST_CASE("classical functions") {
  CHECK(moebius(30) == -1);
  CHECK(moebius(4) == 0);
  CHECK(totient(12) == 4);
  CHECK(radical(48) == 6);
  CHECK(sigma_nu(6, -1) == 2);
  CHECK(sigma_nu(12, 2) == 1 + 4 + 9 + 16 + 36 + 144);
  for (int64_t n = 1; n <= 500; ++n) {
    CHECK(divisors(n) == oracle::divisors(n));
    CHECK(moebius(n) == oracle::moebius(n));
    CHECK(totient(n) == oracle::totient(n));
  }
}

TEST_CASE("jacobi symbol") {
  CHECK(jacobi_symbol(2, 15) == 1);
  CHECK(jacobi_symbol(5, 5) == 0);
  for (int64_t G : {3, 5, 7, 13, 21}) CHECK(jacobi_symbol(1, G) == 1);
  CHECK_THROWS_AS(jacobi_symbol(3, 8), EvenModulus);
  CHECK(jacobi_symbol(q(1, 2), 5) == 0);
  CHECK(jacobi_symbol(q(4), 5) == 1);
  for (int64_t k = 1; k < 80; k += 2)
    for (int64_t n = -40; n < 80; ++n) CHECK(jacobi_symbol(n, k) == oracle::jacobi(n, k));
}

TEST_CASE("nu_split") {
  NuSplit a = nu_split(48, 3);
  CHECK(a.nu_part == 2);
  CHECK(a.star_part == 6);
  CHECK(a.n1 == 2);
  CHECK(a.n2 == 6);
  NuSplit b = nu_split(12, 2);
  CHECK(b.nu_part == 2);
  CHECK(b.star_part == 3);
  NuSplit c = nu_split(7, 2);
  CHECK(c.nu_part_is_trivial);
  CHECK(c.star_part == 7);
  CHECK(c.n1 == 1);
  CHECK(c.n2 == 7);
  for (int nu = 2; nu <= 5; ++nu)
    for (int64_t n = 1; n <= 2000; ++n) {
      NuSplit s = nu_split(n, nu);
      CHECK(oracle::ipow(s.n1, nu) * s.n2 == n);
      CHECK(oracle::ipow(s.nu_part, nu) * s.star_part == n);
    }
}

TEST_CASE("lambda_nu, X_nu, mu_nu") {
  CHECK(lambda_nu(12, 2) == -1);
  CHECK(lambda_nu(8, 3) == 1);
  CHECK(X_nu(27, 3) == 1);
  CHECK(X_nu(28, 3) == 0);
  CHECK(mu_nu(4, 2) == 1);
  CHECK(mu_nu(12, 2) == -1);
  CHECK(mu_star_nu(4, 2) == 1);
  CHECK(mu_star_nu(9, 2) == -1);
}

TEST_CASE("c_nu spot values") {
  CHECK(c_nu(8, 3) == 1);
  CHECK(c_nu(16, 3) == q(-1, 2));
  CHECK(c_nu(24, 3) == q(-1, 3));
  CHECK(c_nu(12, 3) == 0);
  CHECK(c_nu(16, 4) == 1);
  CHECK(c_nu(16 * 6, 4) == q(1, 6));
  CHECK(c_nu(7, 3) == 0);
}

TEST_CASE("Y_nu and A_nu") {
  CHECK(Y_nu(8, 2, chi_one()) == q(-1, 2));
  CHECK(A_nu(12, 2, chi_one()) == -1);
  ArithSeq mu = chi_from_id("mu");
  for (int nu = 2; nu <= 4; ++nu)
    for (int64_t m = 2; m <= 6; ++m) CHECK(A_nu(oracle::ipow(m, nu), nu, mu) == mu(m));
}

TEST_CASE("h_a, mu_k, mu_kv") {
  CHECK(h_a(6, 1) == 2);
  CHECK(mu_k(4, 2) == 0);
  CHECK(mu_kv(8, 3, 1) == q(1, 2));
}

TEST_CASE("moebius_invert") {
  ArithSeq sigma1("sigma1", [](int64_t n) { return sigma_nu(n, 1); });
  ArithSeq g = moebius_invert(sigma1);
  for (int64_t n = 1; n <= 50; ++n) CHECK(g(n) == n);
  ArithSeq h = moebius_invert(chi_one());
  for (int64_t n = 1; n <= 50; ++n) CHECK(h(n) == (n == 1 ? 1 : 0));
  ArithSeq s3("sigma3", [](int64_t n) { return sigma_nu(n, 3); });
  ArithSeq g4 = moebius_invert(s3);
  for (int64_t n = 1; n <= 30; ++n) CHECK(g4(n) / n == n * n);
  ArithSeq back = divisor_sum(g);
  for (int64_t n = 1; n <= 200; ++n) CHECK(back(n) == sigma_nu(n, 1));
}

TEST_CASE("integer roots") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(int64_t{4000000000000000000}) == 2000000000);
  CHECK(exact_root(1728, 3) == 12);
  CHECK_FALSE(exact_root(1729, 3));
  CHECK(iroot(1000, 3) == 10);
  CHECK(iroot(999, 3) == 9);
  for (int64_t n = 0; n < 5000; ++n) {
    int64_t r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("property: divisor sum of lambda_nu is the power indicator") {
  for (int nu = 2; nu <= 5; ++nu)
    for (int64_t n = 1; n <= 10000; ++n) {
      int s = 0;
      for (int64_t d : divisors(n)) s += lambda_nu(d, nu);
      REQUIRE(s == X_nu(n, nu));
      REQUIRE(X_nu(n, nu) == (oracle::is_nu_power(n, nu) ? 1 : 0));
    }
}

TEST_CASE("property: lambda_nu is multiplicative and 1 on powers") {
  for (int nu = 2; nu <= 5; ++nu) {
    for (int64_t n = 1; n <= 100; ++n)
      for (int64_t m = 1; m <= 100; ++m)
        if (std::gcd(n, m) == 1) REQUIRE(lambda_nu(n * m, nu) == lambda_nu(n, nu) * lambda_nu(m, nu));
    for (int64_t n = 1; oracle::ipow(n, nu) <= 10000; ++n) REQUIRE(lambda_nu(oracle::ipow(n, nu), nu) == 1);
  }
}

TEST_CASE("property: lambda_nu against its defining divisor sum") {
  for (int nu = 2; nu <= 5; ++nu)
    for (int64_t n = 1; n <= 3000; ++n) {
      int s = 0;
      for (int64_t d = 1; oracle::ipow(d, nu) <= n; ++d)
        if (n % oracle::ipow(d, nu) == 0) s += oracle::moebius(n / oracle::ipow(d, nu));
      REQUIRE(lambda_nu(n, nu) == s);
    }
}

TEST_CASE("property: c_nu + mu/n is multiplicative") {
  for (int nu = 3; nu <= 4; ++nu)
    for (int64_t n = 1; n <= 1000; ++n)
      for (int64_t m = 1; n * m <= 1000; ++m) {
        if (std::gcd(n, m) != 1) continue;
        auto f = [nu](int64_t k) -> Rational { return c_nu(k, nu) + make_rational(moebius(k), k); };
        REQUIRE(f(n * m) == f(n) * f(m));
      }
}

TEST_CASE("property: mu_star_nu sign rule and mu + mu_nu multiplicativity") {
  for (int nu = 2; nu <= 5; ++nu) {
    for (int64_t n = 1; n <= 10000; ++n) {
      NuSplit s = nu_split(n, nu);
      int sign = (s.n1 % 2 == 0) ? 1 : -1;
      REQUIRE(mu_star_nu(n, nu) == sign * mu_nu(n, nu));
    }
    for (int64_t n = 1; n <= 150; ++n)
      for (int64_t m = 1; m <= 150; ++m)
        if (std::gcd(n, m) == 1)
          REQUIRE(moebius(n * m) + mu_nu(n * m, nu) == (moebius(n) + mu_nu(n, nu)) * (moebius(m) + mu_nu(m, nu)));
  }
}

TEST_CASE("property: Y_nu and A_nu closed forms") {
  ArithSeq chis[] = {chi_from_id("one"), chi_from_id("mu"), chi_from_id("id")};
  for (int nu = 2; nu <= 5; ++nu)
    for (const ArithSeq& chi : chis)
      for (int64_t n = 1; n <= 10000; ++n) {
        REQUIRE(Y_nu(n, nu, chi) == Y_nu_closed(n, nu, chi));
        REQUIRE(A_nu(n, nu, chi) == A_nu_closed(n, nu, chi));
      }
}

TEST_CASE("property: lambda_nu mu^2 = mu and sum over d^2 | n of mu(d) = |mu(n)|") {
  for (int64_t n = 1; n <= 10000; ++n) {
    int m = moebius(n);
    for (int nu = 2; nu <= 5; ++nu) REQUIRE(lambda_nu(n, nu) * m * m == m);
    int s = 0;
    for (int64_t d = 1; d * d <= n; ++d)
      if (n % (d * d) == 0) s += moebius(d);
    REQUIRE(s == std::abs(m));
  }
}

TEST_CASE("property: Moebius inverse of sigma_{nu-1} over n is n^{nu-2}") {
  for (int nu = 2; nu <= 5; ++nu)
    for (int64_t n = 1; n <= 10000; ++n) {
      Rational s = 0;
      for (int64_t d : divisors(n)) {
        int m = moebius(n / d);
        if (m) s += sigma_nu(d, nu - 1) * m;
      }
      REQUIRE(s / n == rational_pow(q(n), nu - 2));
    }
}

TEST_CASE("empirical: sum over d | n of mu(d) mu_k(d)") {
  for (int k = 1; k <= 4; ++k)
    for (int64_t n = 1; n <= 1000; ++n) {
      int s = 0;
      for (int64_t d : divisors(n)) s += moebius(d) * mu_k(d, k);
      if (k == 1)
        CHECK(s == 1);
      else
        CHECK(s == (n == 1 ? 1 : 0));
    }
}
