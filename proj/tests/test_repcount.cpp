#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qforms/arith.hpp"
#include "qforms/errors.hpp"
#include "qforms/repcount.hpp"

using namespace qforms;

namespace {

int64_t count(const std::string& form, int64_t n, const std::string& domains = "") {
  return brute_force_count(parse_form(form, domains), n).count;
}

IntPoly P(std::vector<int64_t> c) { return IntPoly{std::move(c)}; }

}  // namespace

TEST_CASE("brute_force_count") {
  CHECK(count("x^2+y^2", 5) == 8);
  CHECK(count("x^3+y^3", 1729, "x=N1,y=N1") == 4);
  CHECK(count("x^2+x*y", 6, "x=N1,y=N1") == 2);
  CountResult r = brute_force_count(parse_form("x^2+y^2"), 25, true);
  CHECK(r.count == 12);
  CHECK(r.witnesses.size() == 12);
  for (const auto& w : r.witnesses) CHECK(w[0] * w[0] + w[1] * w[1] == 25);
  for (int64_t n = 0; n <= 300; ++n) {
    REQUIRE(count("x^2+y^2", n) == oracle::lattice2(n));
    REQUIRE(count("2*x^2+3*y^2", n) == oracle::lattice_ab(2, 3, n));
  }
  for (int64_t n = 1; n <= 2000; ++n) REQUIRE(count("x^3+y^3", n) == oracle::cube_pairs_signed(n));
}

TEST_CASE("form grammar") {
  CHECK(parse_form("x^2 + y^2").str() == parse_form("x^2+y^2").str());
  CHECK(parse_form("2*x^2 - x + y^3").variables() == std::vector<char>{'x', 'y'});
  CHECK(parse_form("x^3*y^2").product.has_value());
  CHECK(parse_form("x^2+y^2", "x=N1,y=Z").domain_of('x') == Domain::N1);
  CHECK_THROWS_AS(parse_form("x^2+"), ParseError);
  CHECK_THROWS_AS(parse_form("x^2+q^2"), ParseError);
  CHECK(parse_form("x^2+x^2").str() == parse_form("2*x^2").str());
  CHECK_THROWS_AS(parse_form("x^2+y^2", "x=Q"), ParseError);
  CHECK_THROWS_AS(count("x^3+y^2", 10), UnboundedEnumeration);
}

TEST_CASE("r2_jacobi") {
  CHECK(r2_jacobi(0) == 1);
  CHECK(r2_jacobi(5) == 8);
  CHECK(r2_jacobi(3) == 0);
  CHECK(r2_jacobi(25) == 12);
  for (int64_t n = 0; n <= 2000; ++n) REQUIRE(r2_jacobi(n) == oracle::lattice2(n));
}

TEST_CASE("quadratic T transform") {
  CHECK(r_quadratic_T(1, 1, 5) == 8);
  CHECK(r_quadratic_T(1, 2, 3) == 4);
  CHECK(r_quadratic_T(2, 3, 1) == 0);
  CHECK_THROWS_AS(r_quadratic_T(2, 4, 6), GcdNotOne);
  for (auto [A, B] : std::vector<std::pair<int64_t, int64_t>>{{1, 3}, {2, 5}, {3, 7}})
    for (int64_t n = 0; n <= 300; ++n) REQUIRE(r_quadratic_T(A, B, n) == oracle::lattice_ab(A, B, n));
  int64_t c = 0;
  for (int64_t x = -4; x <= 4; ++x)
    for (int64_t y = -4; y <= 4; ++y)
      for (int64_t z = -4; z <= 4; ++z) c += (x * x + 2 * y * y + 3 * z * z == 17);
  CHECK(r2_multi({1, 2, 3}, 17) == c);
  CHECK_THROWS_AS(r2_multi({2, 4, 6}, 10), GcdNotOne);
}

TEST_CASE("shift_count") {
  CHECK(shift_count(1, 1, 0, 0, 0, 5) == 8);
  CHECK(shift_count(1, 1, 2, 0, 0, 3) == 4);
  for (int64_t n = -5; n <= 80; ++n) {
    int64_t c = 0;
    for (int64_t x = -20; x <= 20; ++x)
      for (int64_t y = -20; y <= 20; ++y) c += (x * x + 2 * y * y - 2 * x + 4 * y + 1 == n);
    REQUIRE(shift_count(1, 2, -2, 4, 1, n) == c);
  }
  CHECK_THROWS_AS(shift_count(1, 1, 1, 0, 0, 3), CongruenceViolated);
}

TEST_CASE("cubic and quintic counts") {
  CHECK(r_plus3(2) == 1);
  CHECK(r_plus3(9) == 2);
  CHECK(r_plus3(1729) == 4);
  CHECK(r5(0) == 1);
  CHECK(r5(33) == 2);
  CHECK(r5(1) == 2);
  for (int64_t n = 1; n <= 2000; ++n) {
    REQUIRE(r_plus3(n) == oracle::power_pairs_pos(1, 1, 3, n));
    REQUIRE(r5(n) == oracle::power_pairs_nonneg(5, n));
  }
  CHECK(r5(1 + 3125) == 2);
}

TEST_CASE("r3_signed") {
  CHECK(r3_signed(1) == 2);
  CHECK(r3_signed(2) == 1);
  CHECK(r3_signed(7) == 2);
  for (int64_t n = 1; n <= 10000; ++n) REQUIRE(r3_signed(n) == oracle::cube_pairs_signed(n));
}

TEST_CASE("s_cubic_AB") {
  CHECK(s_cubic_AB(1, 1, 9) == 2);
  CHECK(s_cubic_AB(1, 2, 3) == 1);
  CHECK(s_cubic_AB(2, 3, 1) == 0);
  CHECK_THROWS_AS(s_cubic_AB(2, 4, 10), GcdNotOne);
  for (auto [A, B] : std::vector<std::pair<int64_t, int64_t>>{{1, 1}, {1, 2}, {2, 3}, {3, 5}}) {
    Series s = s_cubic_AB_series(A, B, 600);
    for (int64_t n = 0; n < 600; ++n) REQUIRE(s.coeff(n) == oracle::power_pairs_pos(A, B, 3, n));
  }
}

TEST_CASE("starred divisor sums") {
  CHECK(s_nu_fn(2, 0) == 1);
  CHECK(s_nu_fn(16, 1) == 4);
  CHECK(sigma_star(9, 0) == 1);
  for (int nu = 0; nu <= 3; ++nu)
    for (int64_t n = 1; n <= 2000; ++n) {
      BigInt expect = 0;
      for (int64_t l = 1; 2 * l * l * l <= n; ++l)
        if (2 * l * l * l == n) expect = big_pow(2 * l, nu);
      REQUIRE(s_nu_fn(n, nu) == expect);
    }
  for (int64_t n = 1; n <= 2000; ++n) REQUIRE(sigma_star(n, 0) == Rational(r_plus3(n) - s_nu_fn(n, 0)) / 2);
  for (int64_t k = 0; k <= 3; ++k) CHECK(d3_fn(2 * k + 1) == 0);
  CHECK(d3_fn(9) == 1);
  CHECK(d3_fn(35) == 1);
}

TEST_CASE("s_f vanishes on coprime pairs off the 2 l^3 support") {
  ArithSeq f = chi_from_id("id");
  auto special = [](int64_t p) {
    for (int64_t l = 1; 2 * l * l * l <= p; ++l)
      if (2 * l * l * l == p) return true;
    return false;
  };
  for (int64_t p = 1; p <= 50; ++p) {
    if (special(p)) continue;
    for (int64_t n = 1; n <= 50; ++n)
      for (int64_t m = 1; m <= 50; ++m)
        if (std::gcd(n, m) == 1) REQUIRE(s_f(p * n, f) * s_f(p * m, f) == 0);
  }
}

TEST_CASE("h counts") {
  CHECK(h_kuv(9, 3, 3) == 2);
  int64_t s = 0;
  for (int64_t d : divisors(9)) s += h_kuv(9, d, 9 / d);
  CHECK(s == r_plus3(9));
  CHECK(h_star(9, 3, 3) == 2);
  for (int64_t n = 1; n <= 500; ++n) {
    int64_t t = 0;
    for (int64_t d : divisors(n)) t += h_kuv(n, d, n / d);
    REQUIRE(t == r_plus3(n));
  }
}

TEST_CASE("poly_rep_R") {
  CHECK(poly_rep_R(P({0, 0, 0, 1}), 8, false) == 1);
  CHECK(poly_rep_R(P({0, 0, 1}), 4, true) == 2);
  CHECK(poly_rep_R(P({0, -1, 2}), 10, false) == 0);
  for (int64_t n = 1; n <= 500; ++n) {
    REQUIRE(poly_rep_R(P({0, 1, 2}), n, false) == preimage_count(P({0, 1, 2}), Domain::N1, n));
    REQUIRE(poly_rep_R(P({0, 0, -2, 0, 1}), n, true) == preimage_count(P({0, 0, -2, 0, 1}), Domain::Z, n));
  }
}

TEST_CASE("convolution counts") {
  ArithSeq sq = rep_seq(P({0, 0, 1}), true);
  CHECK(conv_sum_count(sq, sq, 5, 1, 1) == 8);
  ArithSeq cube = rep_seq(P({0, 0, 0, 1}), false);
  CHECK(conv_sum_count(cube, cube, 1729, 0, 0) == 4);
  ArithSeq sq2("two_sq", [sq](int64_t n) -> Rational { return n % 2 == 0 ? sq(n / 2) : Rational(0); });
  CHECK(conv_sum_count(sq, sq2, 3, 1, 1) == 4);
  for (int64_t n = 1; n <= 400; ++n) REQUIRE(conv_sum_count(sq, sq, n, 1, 1) == oracle::lattice2(n));

  ArithSeq pos_sq = rep_seq(P({0, 0, 1}), false);
  ArithSeq pos_id = rep_seq(P({0, 1}), false);
  CHECK(conv_prod_count(pos_sq, pos_sq, 36) == 4);
  CHECK(conv_prod_count(pos_id, pos_id, 12) == 6);
  CHECK(conv_prod_count(cube, pos_sq, 72) == 1);
  for (int64_t n = 1; n <= 400; ++n) {
    REQUIRE(conv_prod_count(pos_sq, pos_sq, n) == count("x^2*y^2", n, "x=N1,y=N1"));
    REQUIRE(conv_prod_count(cube, pos_sq, n) == count("x^3*y^2", n, "x=N1,y=N1"));
  }
}

TEST_CASE("general_f2_count and xnu_xy_count") {
  CHECK(general_f2_count(parse_bipoly("x^2*y+x*y^2"), 2) == 1);
  CHECK(general_f2_count(parse_bipoly("x*y"), 6) == 4);
  CHECK_THROWS_AS(general_f2_count(parse_bipoly("x^2+x*y"), 6), HypothesisViolated);
  for (int64_t n = 1; n <= 300; ++n) {
    int64_t c = 0;
    for (int64_t x = 1; x <= n; ++x)
      for (int64_t y = 1; x * x * y + x * y * y <= n; ++y) c += (x * x * y + x * y * y == n);
    REQUIRE(general_f2_count(parse_bipoly("x^2*y+x*y^2"), n) == c);
  }
  CHECK(xnu_xy_count(6, 2) == 2);
  CHECK(xnu_xy_count(4, 1) == 2);
  CHECK(xnu_xy_count(9, 3) == 1);
  for (int nu = 1; nu <= 4; ++nu)
    for (int64_t n = 1; n <= 300; ++n) {
      int64_t c = 0;
      for (int64_t x = 1; oracle::ipow(x, nu) < n; ++x)
        for (int64_t y = 1; oracle::ipow(x, nu) + x * y <= n; ++y) c += (oracle::ipow(x, nu) + x * y == n);
      REQUIRE(xnu_xy_count(n, nu) == c);
    }
}

TEST_CASE("theorem57_count") {
  ArithSeq one = chi_from_id("one");
  CHECK(theorem57_count(1729, 3, one) == 4);
  CHECK(theorem57_count(5, 2, one) == 2);
  for (int64_t l = 1; l <= 12; ++l) CHECK(theorem57_count(l * l * l, 3, one) == 0);
  for (int nu = 2; nu <= 4; ++nu)
    for (int64_t l = 1; l <= 400; ++l) REQUIRE(theorem57_count(l, nu, one) == oracle::power_pairs_pos(1, 1, nu, l));
}
