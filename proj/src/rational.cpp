#include "qforms/rational.hpp"

#include <limits>

#include "qforms/errors.hpp"

namespace qforms {

BigInt int_from(int64_t v) {
  BigInt z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

Rational make_rational(int64_t num, int64_t den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(int_from(num), int_from(den));
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("bad rational '" + text + "'");
  BigInt n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool fits_int64(const BigInt& z) {
  static const BigInt lo = int_from(std::numeric_limits<int64_t>::min());
  static const BigInt hi = int_from(std::numeric_limits<int64_t>::max());
  return z >= lo && z <= hi;
}

int64_t to_int64(const BigInt& z) {
  if (!fits_int64(z)) throw InvalidArgument("integer does not fit in 64 bits");
  return static_cast<int64_t>(mpz_get_si(z.get_mpz_t()));
}

BigInt big_pow(int64_t base, uint64_t e) {
  BigInt r;
  BigInt b = int_from(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational rational_pow(const Rational& r, int64_t e) {
  if (e < 0) {
    if (r == 0) throw InvalidArgument("zero to a negative power");
    Rational inv = 1 / r;
    return rational_pow(inv, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace qforms
