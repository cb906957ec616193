#include "qforms/arith_seq.hpp"

#include <mutex>
#include <unordered_map>

#include "qforms/arith.hpp"
#include "qforms/errors.hpp"

namespace qforms {

struct ArithSeq::Memo {
  std::mutex mu;
  std::unordered_map<int64_t, Rational> values;
};

ArithSeq::ArithSeq(std::string id, Fn fn) : id_(std::move(id)), fn_(std::move(fn)), memo_(std::make_shared<Memo>()) {}

Rational ArithSeq::operator()(int64_t n) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->values.find(n);
    if (it != memo_->values.end()) return it->second;
  }
  Rational v = fn_(n);
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->values.emplace(n, v);
  return v;
}

ArithSeq constant_seq(const Rational& c) {
  return ArithSeq("const:" + to_string(c), [c](int64_t) { return c; });
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int64_t parse_int(const std::string& s, const std::string& id) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw BadParams("bad integer '" + s + "' in sequence id '" + id + "'");
  }
}

int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t abs64(int64_t n) { return n < 0 ? -n : n; }

}  // namespace

ArithSeq chi_from_id(const std::string& id) {
  auto parts = split(id, ':');
  const std::string& name = parts[0];
  auto want = [&](size_t k) {
    if (parts.size() != k + 1) throw BadParams("sequence id '" + id + "' expects " + std::to_string(k) + " argument(s)");
  };
  if (name == "one") {
    want(0);
    return ArithSeq(id, [](int64_t) { return Rational(1); });
  }
  if (name == "zero") {
    want(0);
    return ArithSeq(id, [](int64_t) { return Rational(0); });
  }
  if (name == "const") {
    want(1);
    Rational c = parse_rational(parts[1]);
    return ArithSeq(id, [c](int64_t) { return c; });
  }
  if (name == "mu") {
    want(0);
    return ArithSeq(id, [](int64_t n) { return n == 0 ? Rational(0) : Rational(moebius(abs64(n))); });
  }
  if (name == "liouville") {
    want(0);
    return ArithSeq(id, [](int64_t n) { return Rational(liouville(n)); });
  }
  if (name == "id") {
    want(0);
    return ArithSeq(id, [](int64_t n) { return Rational(int_from(n)); });
  }
  if (name == "sq") {
    want(0);
    return ArithSeq(id, [](int64_t n) { return Rational(int_from(n) * int_from(n)); });
  }
  if (name == "pow") {
    want(1);
    int64_t k = parse_int(parts[1], id);
    return ArithSeq(id, [k](int64_t n) { return rational_pow(Rational(int_from(n)), k); });
  }
  if (name == "alt") {
    want(0);
    return ArithSeq(id, [](int64_t n) { return Rational(n % 2 == 0 ? 1 : -1); });
  }
  if (name == "jacobi") {
    want(1);
    int64_t k = parse_int(parts[1], id);
    if (k <= 0 || k % 2 == 0) throw BadParams("jacobi modulus must be odd and positive");
    return ArithSeq(id, [k](int64_t n) { return Rational(jacobi_symbol(n, k)); });
  }
  if (name == "kronecker") {
    want(1);
    int64_t k = parse_int(parts[1], id);
    return ArithSeq(id, [k](int64_t n) { return Rational(kronecker_symbol(n, k)); });
  }
  if (name == "lambda_nu" || name == "X_nu" || name == "mu_nu" || name == "mu_star_nu") {
    want(1);
    int nu = static_cast<int>(parse_int(parts[1], id));
    if (nu < 2) throw BadParams("nu must be >= 2");
    int (*fn)(int64_t, int) = name == "lambda_nu" ? lambda_nu : name == "X_nu" ? X_nu : name == "mu_nu" ? mu_nu : mu_star_nu;
    return ArithSeq(id, [fn, nu](int64_t n) { return n <= 0 ? Rational(0) : Rational(fn(n, nu)); });
  }
  if (name == "delta") {
    want(1);
    int64_t k = parse_int(parts[1], id);
    return ArithSeq(id, [k](int64_t n) { return Rational(n == k ? 1 : 0); });
  }
  if (name == "res" || name == "signed_res") {
    want(2);
    int64_t a = parse_int(parts[1], id), m = parse_int(parts[2], id);
    if (m <= 0) throw BadParams("residue modulus must be positive");
    bool sign = name == "signed_res";
    return ArithSeq(id, [a, m, sign](int64_t n) {
      if (mod_floor(n - a, m) != 0) return Rational(0);
      if (!sign) return Rational(1);
      int64_t k = (n - a) / m;
      return Rational(k % 2 == 0 ? 1 : -1);
    });
  }
  throw BadParams("unknown sequence id '" + id + "'");
}

std::vector<std::string> chi_registry_help() {
  return {
      "one, zero, const:<r>",
      "mu, liouville, id, sq, pow:<k>, alt  ((-1)^n)",
      "jacobi:<k> (odd k), kronecker:<k>",
      "lambda_nu:<nu>, X_nu:<nu>, mu_nu:<nu>, mu_star_nu:<nu>",
      "delta:<k> (indicator of n = k)",
      "res:<a>:<m> (indicator of n = a mod m), signed_res:<a>:<m> ((-1)^((n-a)/m) on that class)",
  };
}

}  // namespace qforms
