#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qforms/arith_seq.hpp"
#include "qforms/rational.hpp"
#include "qforms/series.hpp"

namespace qforms {

enum class Combiner { Sum, ProductPair, SumThenProductPair };
std::string combiner_name(Combiner c);

struct FormPart {
  char var = 'x';
  IntPoly poly;
  Domain domain = Domain::Z;
};

/// c * x^a * y^b
struct ProductTerm {
  int64_t coeff = 1;
  char var1 = 'x';
  int exp1 = 1;
  char var2 = 'y';
  int exp2 = 1;
};

struct FormSpec {
  std::vector<FormPart> parts;
  std::optional<ProductTerm> product;
  Combiner combiner = Combiner::Sum;
  int64_t constant = 0;

  std::vector<char> variables() const;
  Domain domain_of(char var) const;
  /// Evaluates the form at an assignment ordered like variables().
  __int128 eval(const std::vector<int64_t>& values) const;
  std::string str() const;
};

/// Parses e.g. "x^2+y^2", "x^3*y^2", "2*x^2 - x + y^3", "x^2+x*y".
/// Domains default to Z; overrides look like "x=Z,y=N1".
FormSpec parse_form(const std::string& text, const std::string& domains = "");

struct CountResult {
  int64_t n = 0;
  int64_t count = 0;
  std::vector<std::vector<int64_t>> witnesses;
};

CountResult brute_force_count(const FormSpec& form, int64_t n, bool want_witnesses = false);

/// Bivariate integer polynomial: (i, j) -> coefficient of x^i y^j.
struct BiPoly {
  std::map<std::pair<int, int>, int64_t> terms;
  __int128 eval(int64_t x, int64_t y) const;
};
BiPoly parse_bipoly(const std::string& text);

/// Integer roots of p (p not identically zero).
std::vector<int64_t> integer_roots(const IntPoly& p);
/// Number of x in the domain with p(x) = m.
int64_t preimage_count(const IntPoly& p, Domain domain, int64_t m);

int64_t r2_jacobi(int64_t n);
/// Number of (x, y) in Z^2 with A x^2 + B y^2 = n by direct scan.
int64_t r_AB_direct(int64_t A, int64_t B, int64_t n);
int64_t r_quadratic_T(int64_t A, int64_t B, int64_t n);
int64_t r2_multi(const std::vector<int64_t>& A, int64_t n);
int64_t shift_count(int64_t A, int64_t B, int64_t C, int64_t D, int64_t E, int64_t n);
/// Application 2: solutions of P(A x^2 + B y^2 + C x + D y + E) = n.
int64_t app2_count(const IntPoly& P, int64_t A, int64_t B, int64_t C, int64_t D, int64_t E, int64_t n);

int64_t r_plus3(int64_t n);
int64_t r5(int64_t n);
int64_t r3_signed(int64_t n);
int64_t s_cubic_AB(int64_t A, int64_t B, int64_t n);
/// sum s_AB(n) q^n below prec.
Series s_cubic_AB_series(int64_t A, int64_t B, int64_t prec);

/// Divisor pairs (d, k) of the starred sums: d | n, (4n/d - d^2)/3 = k^2 != 0, 2 <= d - k even.
std::vector<std::pair<int64_t, int64_t>> starred_divisors(int64_t n);
BigInt s_nu_fn(int64_t n, int nu);
Rational s_f(int64_t n, const ArithSeq& f);
Rational sigma_star(int64_t n, int64_t nu);
int64_t d3_fn(int64_t n);

int64_t h_kuv(int64_t k, int64_t u, int64_t v);
int64_t h_star(int64_t k, int64_t u, int64_t v);

int64_t poly_rep_R(const IntPoly& P, int64_t n, bool signed_divisors);
/// n -> poly_rep_R(P, n, signed) for n >= 1 and the number of integer roots of P at n = 0.
ArithSeq rep_seq(const IntPoly& P, bool signed_divisors);

Rational conv_sum_count(const ArithSeq& R1, const ArithSeq& R2, int64_t n, const Rational& r1_0, const Rational& r2_0);
Rational conv_prod_count(const ArithSeq& R1, const ArithSeq& R2, int64_t n, int64_t c1 = 0, int64_t c2 = 0);
int64_t general_f2_count(const BiPoly& f, int64_t n);
int64_t xnu_xy_count(int64_t n, int nu);
Rational theorem57_count(int64_t l, int nu, const ArithSeq& chi);

}  // namespace qforms
