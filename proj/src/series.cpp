#include "qforms/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qforms/arith.hpp"
#include "qforms/errors.hpp"

namespace qforms {

namespace {

constexpr __int128 kSaturate = static_cast<__int128>(1) << 100;

__int128 clamp128(__int128 v) {
  if (v > kSaturate) return kSaturate;
  if (v < -kSaturate) return -kSaturate;
  return v;
}

std::string exponent_str(int64_t e) {
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

BigInt lcm_of_dens(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& c : v) {
    if (c == 0 || c.get_den() == 1) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return l;
}

void require_unit_constant(const Series& s, const char* what, bool bad_constant_error) {
  auto fail = [&](const std::string& msg) {
    if (bad_constant_error) throw BadConstantTerm(std::string(what) + ": " + msg);
    throw ConstantTermNotOne(std::string(what) + ": " + msg);
  };
  if (s.prec() <= 0) fail("constant term outside the window");
  for (int64_t e = s.offset(); e < 0; ++e)
    if (s.coeff(e) != 0) fail("nonzero coefficient at negative exponent");
  if (s.coeff(0) != 1) fail("constant term is " + to_string(s.coeff(0)));
}

// Coefficients a_0..a_{prec-1} of a series known to vanish below 0.
std::vector<Rational> nonnegative_part(const Series& s) {
  std::vector<Rational> a(static_cast<size_t>(std::max<int64_t>(s.prec(), 0)));
  for (int64_t e = std::max<int64_t>(s.offset(), 0); e < s.prec(); ++e) a[e] = s.coeff(e);
  return a;
}

}  // namespace

int IntPoly::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return -1;
}

int64_t IntPoly::leading() const {
  int d = degree();
  return d < 0 ? 0 : coeffs[d];
}

__int128 IntPoly::eval(int64_t x) const {
  __int128 acc = 0;
  const __int128 ax = x < 0 ? -static_cast<__int128>(x) : x;
  for (int i = degree(); i >= 0; --i) {
    __int128 aa = acc < 0 ? -acc : acc;
    __int128 prod;
    if (ax != 0 && aa > kSaturate / ax)
      prod = ((acc > 0) == (x > 0)) ? kSaturate : -kSaturate;
    else
      prod = acc * x;
    acc = clamp128(prod + coeffs[i]);
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  IntPoly d;
  for (size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(coeffs[i] * static_cast<int64_t>(i));
  return d;
}

std::string IntPoly::str(char var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    int64_t c = coeffs[i];
    if (c == 0) continue;
    int64_t a = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::N1: return "N1";
    case Domain::N0: return "N0";
    case Domain::Z: return "Z";
  }
  return "?";
}

Domain parse_domain(const std::string& s) {
  if (s == "N1" || s == "N") return Domain::N1;
  if (s == "N0") return Domain::N0;
  if (s == "Z") return Domain::Z;
  throw ParseError("unknown domain '" + s + "' (expected Z, N0 or N1)");
}

Series::Series(int64_t offset, std::vector<Rational> coeffs, bool exact_below)
    : offset_(offset), coeffs_(std::move(coeffs)), exact_below_(exact_below) {
  if (coeffs_.empty()) throw EmptyWindow("series window is empty");
}

Series Series::zero(int64_t prec) {
  if (prec <= 0) return Series(prec - 1, std::vector<Rational>(1), true);
  return Series(0, std::vector<Rational>(prec), true);
}

Series Series::one(int64_t prec) {
  if (prec <= 0) throw EmptyWindow("precision must be positive");
  std::vector<Rational> c(prec);
  c[0] = 1;
  return Series(0, std::move(c), true);
}

Series Series::monomial(const Rational& c, int64_t e, int64_t prec) {
  if (e >= prec) return Series(prec - 1, std::vector<Rational>(1), true);
  std::vector<Rational> v(prec - e);
  v[0] = c;
  return Series(e, std::move(v), true);
}

Series Series::polynomial(const std::vector<Rational>& c, int64_t prec) {
  if (prec <= 0) throw EmptyWindow("precision must be positive");
  std::vector<Rational> v(prec);
  for (size_t i = 0; i < c.size() && static_cast<int64_t>(i) < prec; ++i) v[i] = c[i];
  return Series(0, std::move(v), true);
}

Rational Series::coeff(int64_t e) const {
  if (e >= prec()) throw OutOfWindow("exponent " + std::to_string(e) + " >= prec " + std::to_string(prec()));
  if (e < offset_) {
    if (exact_below_) return 0;
    throw OutOfWindow("exponent " + std::to_string(e) + " below offset " + std::to_string(offset_));
  }
  return coeffs_[e - offset_];
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<int64_t> Series::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return offset_ + static_cast<int64_t>(i);
  return std::nullopt;
}

Series Series::truncate(int64_t new_prec) const {
  if (new_prec >= prec()) return *this;
  if (new_prec <= offset_) throw EmptyWindow("truncation leaves an empty window");
  return Series(offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (new_prec - offset_)),
                exact_below_);
}

Series Series::with_exact_below(bool flag) const {
  Series s = *this;
  s.exact_below_ = flag;
  return s;
}

Series Series::set_coeff(int64_t e, const Rational& c) const {
  if (!in_window(e)) throw OutOfWindow("cannot set coefficient outside the window");
  Series s = *this;
  s.coeffs_[e - offset_] = c;
  return s;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    int64_t e = offset_ + static_cast<int64_t>(i);
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << to_string(a);
    } else if (a == 1) {
      os << exponent_str(e);
    } else {
      os << to_string(a) << "*" << exponent_str(e);
    }
  }
  if (first) return "0";
  return os.str();
}

Series add(const Series& a, const Series& b) {
  int64_t lo = std::min(a.offset(), b.offset());
  if (!a.exact_below()) lo = std::max(lo, a.offset());
  if (!b.exact_below()) lo = std::max(lo, b.offset());
  int64_t hi = std::min(a.prec(), b.prec());
  if (hi <= lo) throw EmptyWindow("sum has an empty window");
  std::vector<Rational> c(hi - lo);
  for (int64_t e = lo; e < hi; ++e) {
    if (a.in_window(e)) c[e - lo] += a.coeffs()[e - a.offset()];
    if (b.in_window(e)) c[e - lo] += b.coeffs()[e - b.offset()];
  }
  return Series(lo, std::move(c), a.exact_below() && b.exact_below());
}

Series negate(const Series& a) {
  std::vector<Rational> c(a.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs()[i];
  return Series(a.offset(), std::move(c), a.exact_below());
}

Series sub(const Series& a, const Series& b) { return add(a, negate(b)); }

Series scale(const Series& a, const Rational& k) {
  std::vector<Rational> c(a.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] * k;
  return Series(a.offset(), std::move(c), a.exact_below());
}

Series shift(const Series& a, int64_t m) { return Series(a.offset() + m, a.coeffs(), a.exact_below()); }

Series mul(const Series& a, const Series& b) {
  int64_t lo = a.offset() + b.offset();
  int64_t hi = std::min(a.prec() + b.offset(), b.prec() + a.offset());
  if (hi <= lo) throw EmptyWindow("product has an empty window");
  const int64_t len = hi - lo;
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  const int64_t na = std::min<int64_t>(len, ac.size());
  const int64_t nb = std::min<int64_t>(len, bc.size());

  std::vector<int64_t> bnz;
  for (int64_t j = 0; j < nb; ++j)
    if (bc[j] != 0) bnz.push_back(j);

  BigInt la = lcm_of_dens(std::vector<Rational>(ac.begin(), ac.begin() + na));
  BigInt lb = lcm_of_dens(std::vector<Rational>(bc.begin(), bc.begin() + nb));
  std::vector<Rational> out(len);
  if (mpz_sizeinbase(la.get_mpz_t(), 2) + mpz_sizeinbase(lb.get_mpz_t(), 2) < 2048) {
    std::vector<BigInt> ai(na), bi(nb), acc(len);
    for (int64_t i = 0; i < na; ++i)
      if (ac[i] != 0) ai[i] = ac[i].get_num() * (la / ac[i].get_den());
    for (int64_t j : bnz) bi[j] = bc[j].get_num() * (lb / bc[j].get_den());
    for (int64_t i = 0; i < na; ++i) {
      if (ai[i] == 0) continue;
      for (int64_t j : bnz) {
        if (i + j >= len) break;
        mpz_addmul(acc[i + j].get_mpz_t(), ai[i].get_mpz_t(), bi[j].get_mpz_t());
      }
    }
    BigInt den = la * lb;
    for (int64_t k = 0; k < len; ++k) {
      if (acc[k] == 0) continue;
      out[k] = Rational(acc[k], den);
      out[k].canonicalize();
    }
  } else {
    for (int64_t i = 0; i < na; ++i) {
      if (ac[i] == 0) continue;
      for (int64_t j : bnz) {
        if (i + j >= len) break;
        out[i + j] += ac[i] * bc[j];
      }
    }
  }
  return Series(lo, std::move(out), a.exact_below() && b.exact_below());
}

Series power(const Series& a, unsigned k) {
  if (k == 0) {
    int64_t p = a.prec() - a.offset();
    return Series::one(std::max<int64_t>(p, 1));
  }
  Series result = a;
  for (unsigned i = 1; i < k; ++i) result = mul(result, a);
  return result;
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a, const Series& b) { return sub(a, b); }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }
Series operator-(const Series& a) { return negate(a); }

Series exp_series(const Series& s) {
  for (int64_t e = s.offset(); e <= 0 && e < s.prec(); ++e)
    if (s.coeff(e) != 0) throw NonzeroConstantTerm("exp needs a series without terms at exponents <= 0");
  const int64_t n_max = std::max<int64_t>(s.prec(), 1);
  std::vector<Rational> a = nonnegative_part(s);
  std::vector<Rational> ka(a.size());
  std::vector<int64_t> nz;
  for (size_t k = 1; k < a.size(); ++k)
    if (a[k] != 0) {
      ka[k] = a[k] * static_cast<long>(k);
      nz.push_back(static_cast<int64_t>(k));
    }
  std::vector<Rational> b(n_max);
  b[0] = 1;
  for (int64_t n = 1; n < n_max; ++n) {
    Rational acc = 0;
    for (int64_t k : nz) {
      if (k > n) break;
      if (b[n - k] != 0) acc += ka[k] * b[n - k];
    }
    b[n] = acc / n;
  }
  return Series(0, std::move(b), true);
}

Series log_series(const Series& s) {
  require_unit_constant(s, "log", false);
  std::vector<Rational> a = nonnegative_part(s);
  const int64_t n_max = static_cast<int64_t>(a.size());
  std::vector<Rational> c(n_max);
  // n c_n = n a_n - sum_{k=1}^{n-1} k c_k a_{n-k}
  std::vector<Rational> kc(n_max);
  for (int64_t n = 1; n < n_max; ++n) {
    Rational acc = a[n] * n;
    for (int64_t k = 1; k < n; ++k)
      if (kc[k] != 0 && a[n - k] != 0) acc -= kc[k] * a[n - k];
    c[n] = acc / n;
    kc[n] = acc;
  }
  return Series(0, std::move(c), true);
}

Series pow_rational(const Series& s, const Rational& r) {
  require_unit_constant(s, "pow", false);
  std::vector<Rational> a = nonnegative_part(s);
  const int64_t n_max = static_cast<int64_t>(a.size());
  std::vector<int64_t> nz;
  for (int64_t k = 1; k < n_max; ++k)
    if (a[k] != 0) nz.push_back(k);
  std::vector<Rational> b(n_max);
  b[0] = 1;
  const Rational r1 = r + 1;
  for (int64_t n = 1; n < n_max; ++n) {
    Rational acc = 0;
    for (int64_t k : nz) {
      if (k > n) break;
      if (b[n - k] == 0) continue;
      acc += (r1 * k - n) * a[k] * b[n - k];
    }
    b[n] = acc / n;
  }
  return Series(0, std::move(b), true);
}

Series inverse(const Series& s) { return pow_rational(s, -1); }

Series sqrt_T(const Series& s) {
  require_unit_constant(s, "sqrt_T", true);
  std::vector<Rational> a = nonnegative_part(s);
  const int64_t n_max = static_cast<int64_t>(a.size());
  std::vector<Rational> b(n_max);
  b[0] = 1;
  for (int64_t n = 1; n < n_max; ++n) {
    Rational acc = a[n];
    for (int64_t m = 1; m < n; ++m)
      if (b[m] != 0 && b[n - m] != 0) acc -= b[m] * b[n - m];
    b[n] = acc / 2;
  }
  return Series(0, std::move(b), true);
}

Series q_integrate(const Series& s) {
  for (int64_t e = s.offset(); e <= 0 && e < s.prec(); ++e)
    if (s.coeff(e) != 0) throw NonpositiveExponentPresent("q_integrate needs zero coefficients at exponents <= 0");
  std::vector<Rational> c(s.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) {
    int64_t e = s.offset() + static_cast<int64_t>(i);
    if (e > 0 && s.coeffs()[i] != 0) c[i] = s.coeffs()[i] / e;
  }
  return Series(s.offset(), std::move(c), s.exact_below());
}

Series inflate(const Series& s, int64_t k) {
  if (k < 1) throw InvalidArgument("inflate factor must be >= 1");
  if (k == 1) return s;
  int64_t lo = s.offset() * k;
  int64_t hi = k * (s.prec() - 1) + 1;
  std::vector<Rational> c(hi - lo);
  for (size_t i = 0; i < s.coeffs().size(); ++i) c[i * k] = s.coeffs()[i];
  return Series(lo, std::move(c), s.exact_below());
}

Series lambert(const ArithSeq& a, int64_t prec) {
  if (prec < 1) throw InvalidArgument("lambert precision must be >= 1");
  std::vector<Rational> c(prec);
  for (int64_t n = 1; n < prec; ++n) {
    Rational v = a(n);
    if (v == 0) continue;
    for (int64_t m = n; m < prec; m += n) c[m] += v;
  }
  return Series(0, std::move(c), true);
}

Series product_expand(const ArithSeq& e, int64_t prec) {
  if (prec < 1) throw InvalidArgument("product precision must be >= 1");
  // log prod (1-q^n)^{e(n)} = sum_m (w_m/m) q^m with w_m = -sum_{d|m} d e(d)
  std::vector<Rational> w(prec);
  bool integral = true;
  for (int64_t d = 1; d < prec; ++d) {
    Rational v = e(d);
    if (v == 0) continue;
    Rational dv = v * d;
    for (int64_t m = d; m < prec; m += d) w[m] -= dv;
  }
  std::vector<int64_t> nz;
  for (int64_t k = 1; k < prec; ++k)
    if (w[k] != 0) {
      nz.push_back(k);
      if (w[k].get_den() != 1) integral = false;
    }

  std::vector<Rational> b(prec);
  b[0] = 1;
  int64_t start = 1;
  if (integral) {
    std::vector<BigInt> wi(prec), bi(prec);
    for (int64_t k : nz) wi[k] = w[k].get_num();
    bi[0] = 1;
    BigInt acc;
    int64_t m = 1;
    for (; m < prec; ++m) {
      acc = 0;
      for (int64_t k : nz) {
        if (k > m) break;
        if (bi[m - k] != 0) mpz_addmul(acc.get_mpz_t(), wi[k].get_mpz_t(), bi[m - k].get_mpz_t());
      }
      if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(m))) break;
      mpz_divexact_ui(bi[m].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
    }
    for (int64_t j = 0; j < m; ++j) b[j] = bi[j];
    start = m;
  }
  for (int64_t m = start; m < prec; ++m) {
    Rational acc = 0;
    for (int64_t k : nz) {
      if (k > m) break;
      if (b[m - k] != 0) acc += w[k] * b[m - k];
    }
    b[m] = acc / m;
  }
  return Series(0, std::move(b), true);
}

Series theta_series(const Rational& a, const Rational& b, bool alternating, int64_t prec) {
  if (a <= 0) throw NonpositiveA("theta_series needs a > 0");
  if (!is_integer(a + b) || !is_integer(a - b) || !is_integer(4 * a + 2 * b))
    throw NonIntegralExponent("a*n^2 + b*n is not integral for all n");
  auto expo = [&](int64_t n) -> int64_t {
    Rational v = a * n * n + b * n;
    return to_int64(v.get_num());
  };
  Rational vertex = -b / (2 * a);
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), vertex.get_num_mpz_t(), vertex.get_den_mpz_t());
  int64_t n0 = to_int64(fl);
  int64_t min_e = std::min(expo(n0), expo(n0 + 1));
  if (min_e >= prec) return Series(prec - 1, std::vector<Rational>(1), true);
  std::vector<Rational> c(prec - min_e);
  auto add_term = [&](int64_t n) {
    int64_t e = expo(n);
    if (e >= prec) return false;
    c[e - min_e] += (alternating && (n % 2 != 0)) ? -1 : 1;
    return true;
  };
  for (int64_t n = n0 + 1; add_term(n); ++n) {
  }
  for (int64_t n = n0; add_term(n); --n) {
  }
  return Series(min_e, std::move(c), true);
}

Series poly_theta(const IntPoly& p, const ArithSeq& chi, Domain domain, int64_t prec) {
  int deg = p.degree();
  if (deg < 1 || p.leading() <= 0) throw InvalidArgument("poly_theta needs a nonconstant polynomial with positive leading coefficient");
  if (domain == Domain::Z && deg % 2 == 1) throw UnboundedBelow("odd-degree polynomial over all integers");
  // Cauchy bound of P': beyond it P is monotone.
  IntPoly dp = p.derivative();
  int64_t bound = 1;
  if (dp.degree() >= 1) {
    __int128 mx = 0;
    for (int i = 0; i < dp.degree(); ++i) {
      __int128 c = dp.coeffs[i] < 0 ? -static_cast<__int128>(dp.coeffs[i]) : dp.coeffs[i];
      __int128 q = (c + dp.leading() - 1) / dp.leading();
      mx = std::max(mx, q);
    }
    bound = static_cast<int64_t>(mx) + 2;
  }
  int64_t start = domain == Domain::N1 ? 1 : domain == Domain::N0 ? 0 : -bound;
  std::vector<std::pair<int64_t, int64_t>> terms;  // (n, P(n))
  auto visit = [&](int64_t n) {
    __int128 v = p.eval(n);
    terms.emplace_back(n, static_cast<int64_t>(std::clamp<__int128>(v, INT64_MIN / 2, INT64_MAX / 2)));
    return v;
  };
  int64_t hi_start = std::max(start, bound);
  for (int64_t n = start; n < hi_start; ++n) visit(n);
  for (int64_t n = hi_start;; ++n)
    if (visit(n) >= prec) break;
  if (domain == Domain::Z)
    for (int64_t n = start - 1;; --n)
      if (visit(n) >= prec) break;
  int64_t min_e = std::numeric_limits<int64_t>::max();
  for (auto& t : terms) min_e = std::min(min_e, t.second);
  if (min_e >= prec) return Series(prec - 1, std::vector<Rational>(1), true);
  std::vector<Rational> c(prec - min_e);
  std::sort(terms.begin(), terms.end());
  for (auto& [n, e] : terms)
    if (e < prec) c[e - min_e] += chi(n);
  return Series(min_e, std::move(c), true);
}

Comparison compare(const Series& a, const Series& b) {
  constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min();
  int64_t la = a.exact_below() ? kNegInf : a.offset();
  int64_t lb = b.exact_below() ? kNegInf : b.offset();
  Comparison r;
  r.lo = std::max(la, lb);
  if (r.lo == kNegInf) r.lo = std::min(a.offset(), b.offset());
  r.hi = std::min(a.prec(), b.prec());
  if (r.hi <= r.lo) throw EmptyWindow("comparison window is empty");
  for (int64_t e = r.lo; e < r.hi; ++e) {
    Rational x = a.coeff(e), y = b.coeff(e);
    if (x != y) {
      r.equal = false;
      r.first_diff = e;
      r.lhs_value = x;
      r.rhs_value = y;
      break;
    }
  }
  return r;
}

}  // namespace qforms
