#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qforms/arith_seq.hpp"
#include "qforms/rational.hpp"

namespace qforms {

/// Integer polynomial, coeffs[i] multiplies x^i.
struct IntPoly {
  std::vector<int64_t> coeffs;

  int degree() const;
  int64_t leading() const;
  /// Saturates at +-2^100 instead of overflowing.
  __int128 eval(int64_t x) const;
  IntPoly derivative() const;
  std::string str(char var = 'x') const;
};

enum class Domain { N1, N0, Z };
std::string domain_name(Domain d);
Domain parse_domain(const std::string& s);

/// Truncated Laurent series: coefficients of q^offset .. q^(prec-1).
/// When exact_below is set the series is known to vanish below offset.
class Series {
 public:
  Series(int64_t offset, std::vector<Rational> coeffs, bool exact_below = true);

  static Series zero(int64_t prec);
  static Series one(int64_t prec);
  static Series monomial(const Rational& c, int64_t e, int64_t prec);
  /// Exact polynomial sum c_i q^i, truncated at prec.
  static Series polynomial(const std::vector<Rational>& c, int64_t prec);

  int64_t offset() const { return offset_; }
  int64_t prec() const { return offset_ + static_cast<int64_t>(coeffs_.size()); }
  bool exact_below() const { return exact_below_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int64_t e) const;
  bool in_window(int64_t e) const { return e >= offset_ && e < prec(); }
  bool is_zero() const;
  /// Lowest exponent with a nonzero coefficient, if any.
  std::optional<int64_t> valuation() const;

  Series truncate(int64_t new_prec) const;
  Series with_exact_below(bool flag) const;
  Series set_coeff(int64_t e, const Rational& c) const;

  std::string str() const;

 private:
  int64_t offset_;
  std::vector<Rational> coeffs_;
  bool exact_below_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const Rational& c);
Series shift(const Series& a, int64_t m);
Series power(const Series& a, unsigned k);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator-(const Series& a);

Series exp_series(const Series& s);
Series log_series(const Series& s);
Series pow_rational(const Series& s, const Rational& r);
Series inverse(const Series& s);
Series sqrt_T(const Series& s);
Series q_integrate(const Series& s);
Series inflate(const Series& s, int64_t k);

Series lambert(const ArithSeq& a, int64_t prec);
/// prod_{n>=1} (1 - q^n)^{e(n)} to precision prec.
Series product_expand(const ArithSeq& e, int64_t prec);
Series theta_series(const Rational& a, const Rational& b, bool alternating, int64_t prec);
Series poly_theta(const IntPoly& p, const ArithSeq& chi, Domain domain, int64_t prec);

struct Comparison {
  int64_t lo = 0;
  int64_t hi = 0;
  bool equal = true;
  std::optional<int64_t> first_diff;
  Rational lhs_value;
  Rational rhs_value;
};

/// Compares on the intersection of both valid windows.
Comparison compare(const Series& a, const Series& b);

}  // namespace qforms
