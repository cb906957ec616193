#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "qforms/arith.hpp"
#include "qforms/errors.hpp"
#include "qforms/residues.hpp"

using namespace qforms;

namespace {

bool prime(int64_t n) { return n >= 2 && oracle::factor(n).size() == 1 && oracle::factor(n)[0].second == 1; }

}  // namespace

TEST_CASE("res_count") {
  CHECK(res_count(1, 8) == 4);
  CHECK(res_count(1, 15) == 4);
  CHECK(res_count(3, 5) == 0);
  for (int64_t n = 2; n <= 120; ++n)
    for (int64_t a = -10; a < n; ++a) REQUIRE(res_count(a, n) == oracle::sqrt_count(a, n));
}

TEST_CASE("property: nonzero counts follow the 2^{r+u} rule") {
  for (int64_t n = 2; n <= 500; ++n)
    for (int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      int64_t c = res_count(a, n);
      if (c != 0) REQUIRE(c == res_rule(n));
    }
}

TEST_CASE("th75_count") {
  CHECK(th75_count(3, 7) == 12);
  CHECK(th75_count(3, 5) == 0);
  CHECK(th75_count(7, 7) == 6);
  CHECK_THROWS_AS(th75_count(4, 7), InvalidArgument);
  CHECK_THROWS_AS(th75_count(3, 2), InvalidArgument);
}

TEST_CASE("property: residue pair scan equals 2c(p,q)(q-1) for primes up to 100") {
  for (int64_t p = 2; p <= 100; ++p) {
    if (!prime(p)) continue;
    for (int64_t q = 3; q <= 100; ++q) {
      if (!prime(q) || p == q) continue;
      int64_t scan = 0;
      for (int64_t x = 0; x < q; ++x)
        for (int64_t y = 1; y < q; ++y) scan += (x * x + p * y * y) % q == 0;
      int c = oracle::legendre(-p, q) >= 0 ? 1 : 0;
      REQUIRE(th75_count(p, q) == scan);
      REQUIRE(scan == 2 * c * (q - 1));
    }
  }
}

TEST_CASE("impossibility_check") {
  CHECK_THROWS_AS(impossibility_check(1, 3, 7), HypothesisViolated);
  ImpossibilityResult r = impossibility_check(1, 1, 3);
  CHECK_FALSE(r.counterexample);
  CHECK(r.symbol == -1);
  CHECK(oracle::legendre(-2, 11) == 1);
  CHECK_THROWS_AS(impossibility_check(1, 2, 11), HypothesisViolated);
  CHECK_THROWS_AS(impossibility_check(1, 1, 15), HypothesisViolated);
}

TEST_CASE("empirical: impossibility scan agrees with direct search") {
  int checked = 0;
  for (int64_t a = 1; a <= 6; ++a)
    for (int64_t b = 1; b <= 6; ++b)
      for (int64_t n = 3; n <= 301; n += 2) {
        if (n % 5 == 0 || n % 17 == 0) continue;
        if (oracle::jacobi(-a * b, n) != -1) continue;
        bool found = false;
        for (int64_t x = 0; a * x * x <= n && !found; ++x)
          for (int64_t y = 0; a * x * x + b * y * y <= n; ++y)
            if (a * x * x + b * y * y == n) found = true;
        ImpossibilityResult r = impossibility_check(a, b, n);
        REQUIRE(r.counterexample == found);
        if (found) REQUIRE(a * r.x * r.x + b * r.y * r.y == n);
        ++checked;
      }
  CHECK(checked > 100);
}

TEST_CASE("th78_classify") {
  ResidueClassification c = th78_classify(31);
  CHECK(c.S11 == std::vector<int64_t>{1, 4, 9, 16, 25});
  CHECK(c.S12 == std::vector<int64_t>{2, 5, 7, 8, 10, 14, 18, 19, 20, 28});
  CHECK(c.S0 == std::vector<int64_t>{31});
  ResidueClassification c3 = th78_classify(3);
  CHECK(c3.S11 == std::vector<int64_t>{1});
  CHECK(c3.S0 == std::vector<int64_t>{3});
  CHECK(th78_classify(7).S11 == std::vector<int64_t>{1, 4});
  CHECK_THROWS_AS(th78_classify(5), BadModulus);
  CHECK_THROWS_AS(th78_classify(15), BadModulus);
}

TEST_CASE("property: residue classes partition 1..t") {
  for (int64_t t = 3; t <= 200; t += 4) {
    if (!prime(t)) continue;
    ResidueClassification c = th78_classify(t);
    std::vector<int64_t> all;
    for (const auto* s : {&c.S1, &c.Sm1, &c.S0}) {
      REQUIRE(std::is_sorted(s->begin(), s->end()));
      all.insert(all.end(), s->begin(), s->end());
    }
    std::sort(all.begin(), all.end());
    std::vector<int64_t> expect(t);
    std::iota(expect.begin(), expect.end(), 1);
    REQUIRE(all == expect);
    std::vector<int64_t> s1;
    std::merge(c.S11.begin(), c.S11.end(), c.S12.begin(), c.S12.end(), std::back_inserter(s1));
    REQUIRE(s1 == c.S1);
    for (int64_t n : c.S11) {
      int64_t r = 0;
      while (r * r < n) ++r;
      REQUIRE(r * r == n);
    }
  }
}

TEST_CASE("empirical: the residue-class reading of S11 fails at 63 for t = 31") {
  bool found = false;
  for (int64_t x = 0; x * x <= 63; ++x)
    for (int64_t y = 0; x * x + 31 * y * y <= 63; ++y) found |= x * x + 31 * y * y == 63;
  CHECK_FALSE(found);
  CHECK(63 % 31 == 1);
}
