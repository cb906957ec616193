#include <numeric>

#include "qforms/identities.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "identities_internal.hpp"
#include "qforms/errors.hpp"

namespace qforms {

std::string kind_name(CheckKind k) { return k == CheckKind::SeriesEq ? "SeriesEq" : "SeqEq"; }

bool IdentityReport::ok() const {
  if (experimental) return true;
  return expect_fail ? !equal : equal;
}

namespace detail {

Rational R(int64_t v) { return Rational(int_from(v)); }

Params::Params(const ParamMap& defaults, const ParamMap& given) : values_(defaults) {
  for (const auto& [k, v] : given) {
    if (!defaults.count(k)) {
      std::string known;
      for (const auto& [dk, dv] : defaults) known += (known.empty() ? "" : ", ") + dk;
      throw BadParams("unknown parameter '" + k + "' (known: " + (known.empty() ? "none" : known) + ")");
    }
    values_[k] = v;
  }
}

const std::string& Params::str(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw BadParams("missing parameter '" + key + "'");
  return it->second;
}

int64_t Params::integer(const std::string& key) const {
  const std::string& s = str(key);
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw BadParams("parameter '" + key + "' must be an integer, got '" + s + "'");
}

Rational Params::rational(const std::string& key) const {
  try {
    return parse_rational(str(key));
  } catch (const Error&) {
    throw BadParams("parameter '" + key + "' must be a rational, got '" + str(key) + "'");
  }
}

ArithSeq Params::chi(const std::string& key) const { return chi_from_id(str(key)); }

IntPoly Params::poly(const std::string& key) const {
  try {
    return parse_intpoly(str(key));
  } catch (const ParseError& e) {
    throw BadParams("parameter '" + key + "': " + e.what());
  }
}

BiPoly Params::bipoly(const std::string& key) const {
  try {
    return parse_bipoly(str(key));
  } catch (const ParseError& e) {
    throw BadParams("parameter '" + key + "': " + e.what());
  }
}

IntPoly parse_intpoly(const std::string& text) {
  FormSpec f = parse_form(text);
  if (f.product || f.parts.size() != 1 || f.parts[0].var != 'x')
    throw ParseError("expected a polynomial in x, got '" + text + "'");
  IntPoly p = f.parts[0].poly;
  p.coeffs[0] += f.constant;
  return p;
}

Entry& Registry::add(std::string id, std::string statement, int64_t default_order, Builder build) {
  Entry e;
  e.info.id = std::move(id);
  e.info.statement = std::move(statement);
  e.info.default_order = default_order;
  e.build = std::move(build);
  entries_.push_back(std::move(e));
  return entries_.back();
}

Series seq_series(const std::function<Rational(int64_t)>& fn, int64_t lo, int64_t prec) {
  if (prec <= lo) throw EmptyWindow("order must exceed " + std::to_string(lo));
  std::vector<Rational> c;
  c.reserve(prec - lo);
  for (int64_t n = lo; n < prec; ++n) c.push_back(fn(n));
  return Series(lo, std::move(c), true);
}

Series power_sum(const std::function<Rational(int64_t)>& coef, const std::function<int64_t(int64_t)>& e, int64_t start,
                 int64_t prec) {
  std::vector<Rational> c(prec);
  for (int64_t n = start;; ++n) {
    int64_t k = e(n);
    if (k >= prec) break;
    if (k < 0) throw InvalidArgument("negative exponent in power_sum");
    c[k] += coef(n);
  }
  return Series(0, std::move(c), true);
}

Series power_series(const ArithSeq& f, int k, int64_t prec) {
  IntPoly p{std::vector<int64_t>(k + 1, 0)};
  p.coeffs[k] = 1;
  return poly_theta(p, f, Domain::N1, prec).truncate(prec);
}

// f_i: positive integers x with f(x) = d.
std::vector<int64_t> preimages_pos(const IntPoly& f, int64_t d) {
  IntPoly g = f;
  g.coeffs[0] -= d;
  std::vector<int64_t> out;
  if (g.degree() < 1) return out;
  for (int64_t x : integer_roots(g))
    if (x >= 1) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int64_t eval64(const IntPoly& p, int64_t x) { return static_cast<int64_t>(p.eval(x)); }

struct LinearPair {
  IntPoly f;
  IntPoly g1;
};

LinearPair linear_pair(const Params& p) {
  int64_t a1 = p.integer("a1"), b1 = p.integer("b1"), c1 = p.integer("c1"), d1 = p.integer("d1");
  if (a1 <= 0 || c1 <= 0 || a1 + b1 < 1 || c1 + d1 < 1)
    throw BadParams("need a1, c1 > 0, a1 + b1 >= 1 and c1 + d1 >= 1");
  return {IntPoly{{b1, a1}}, IntPoly{{d1, c1}}};
}

// sum chi(n) q^{f(n) g1(n)} / (1 - q^{f(n)})
Series linear_lerch(const LinearPair& lp, const ArithSeq& chi, int64_t prec) {
  std::vector<Rational> c(prec);
  for (int64_t n = 1;; ++n) {
    int64_t step = eval64(lp.f, n), start = step * eval64(lp.g1, n);
    if (start >= prec) break;
    Rational x = chi(n);
    for (int64_t e = start; e < prec; e += step) c[e] += x;
  }
  return Series(0, std::move(c), true);
}

// X_0(n, k) of the product form, with the tail condition supplied by the caller.
Series linear_product(const LinearPair& lp, const ArithSeq& chi, int64_t prec,
                      const std::function<bool(int64_t n, int64_t k, int64_t fi)>& x0) {
  ArithSeq X("X", [&](int64_t n) -> Rational {
    Rational s = 0;
    for (int64_t d : divisors(n)) {
      auto fi = preimages_pos(lp.f, d);
      if (fi.empty()) continue;
      for (int64_t delta : divisors(n / d)) {
        if (!x0(d * delta, d, fi[0])) continue;
        int mu = moebius(n / d / delta);
        if (mu != 0) s += R(d * delta * mu) * chi(fi[0]);
      }
    }
    return -s / n;
  });
  return product_expand(X, prec);
}

struct Th381 {
  IntPoly f, g1;
  ArithSeq chi, g;
};

Th381 th381_params(const Params& p) {
  Th381 t{p.poly("f"), p.poly("g1"), p.chi("chi"), p.chi("g")};
  if (t.f.degree() < 1 || t.f.leading() <= 0) throw BadParams("f must be nonconstant with positive leading coefficient");
  return t;
}

Series th381_lhs(const Th381& t, int64_t prec) {
  std::vector<Rational> c(prec);
  for (int64_t n = 1; n < prec; ++n) {
    int64_t fn = eval64(t.f, n), gn = eval64(t.g1, n);
    if (fn < 1) continue;
    for (int64_t l = std::max<int64_t>(1, 1 - gn); fn * (l + gn) < prec; ++l) c[fn * (l + gn)] += t.chi(n) * t.g(l) / l;
  }
  return Series(0, std::move(c), true);
}

}  // namespace

void register_core(Registry& r) {
  r.add("jacobi2sq", "theta3^2 = 1 + sum delta_0(n) q^n with delta_0(n) = 4 sum_{d|n} (-4|d)", 200, [](const Params&, int64_t N) {
     Series t = theta_series(1, 0, false, N);
     Series rhs = seq_series(
         [](int64_t n) -> Rational {
           if (n == 0) return Rational(1);
           int64_t s = 0;
           for (int64_t d : divisors(n)) s += d % 4 == 1 ? 1 : d % 4 == 3 ? -1 : 0;
           return R(4 * s);
         },
         0, N);
     return Sides{t * t, rhs};
   });

  r.add("jacobi2sq_lambert", "theta3^2 = 1 + 4 sum_{m>=1} q^m / (1 + q^{2m})", 200, [](const Params&, int64_t N) {
     Series t = theta_series(1, 0, false, N);
     std::vector<Rational> c(N);
     c[0] = 1;
     for (int64_t m = 1; m < N; ++m)
       for (int64_t k = 0; m * (2 * k + 1) < N; ++k) c[m * (2 * k + 1)] += k % 2 == 0 ? 4 : -4;
     return Sides{t * t, Series(0, std::move(c), true)};
   });

  r.add("th18", "sum_{n>=1} chi(n) q^{P(n)} = sum q^n sum_{d|n, P(d)=n} chi(d)", 200, [](const Params& p, int64_t N) {
     IntPoly P = p.poly("P");
     ArithSeq chi = p.chi("chi");
     if (P.coeffs[0] != 0) throw BadParams("P(0) must be 0");
     Series lhs = poly_theta(P, chi, Domain::N1, N).truncate(N);
     Series rhs = seq_series(
         [&](int64_t n) -> Rational {
           Rational s = 0;
           if (n == 0) return s;
           for (int64_t d : divisors(n))
             if (P.eval(d) == n) s += chi(d);
           return s;
         },
         0, N);
     return Sides{lhs, rhs};
   }).info.defaults = {{"P", "2*x^2+x"}, {"chi", "jacobi:5"}};

  auto th20_builder = [](const IntPoly& P, const ArithSeq& chi, int64_t N) {
    if (P.coeffs[0] != 0) throw BadParams("P(0) must be 0");
    if (P.degree() < 2 || P.degree() % 2 != 0 || P.leading() <= 0) throw BadParams("P needs even degree >= 2 and positive leading coefficient");
    Series lhs = poly_theta(P, chi, Domain::Z, N);
    Rational c0 = chi(0);
    for (int64_t root : integer_roots(P))
      if (root != 0) c0 += chi(root);
    int64_t lo = std::min<int64_t>(0, lhs.offset());
    std::vector<Rational> c(N - lo);
    c[-lo] = c0;
    // negative values occur only on the bounded set where P < 0
    IntPoly dp = P.derivative();
    int64_t bound = 2;
    for (int64_t x : dp.coeffs) bound += x < 0 ? -x : x;
    for (int64_t x = -bound; x <= bound; ++x) {
      __int128 v = P.eval(x);
      if (v < 0) c[static_cast<int64_t>(v) - lo] += chi(x);
    }
    for (int64_t n = 1; n < N; ++n) {
      Rational s = 0;
      for (int64_t d : divisors(n))
        for (int64_t sd : {d, -d})
          if (P.eval(sd) == n) s += chi(sd);
      c[n - lo] = s;
    }
    return Sides{lhs, Series(lo, std::move(c), true)};
  };

  Entry& th20 = r.add("th20", "sum_{x in Z} chi(x) q^{P(x)} = chi(0) + sum_{roots} chi(r) + sum_{P(x)<0} chi(x) q^{P(x)} + sum q^n R_1(n)",
                      200, [th20_builder](const Params& p, int64_t N) { return th20_builder(p.poly("P"), p.chi("chi"), N); });
  th20.info.defaults = {{"P", "x^4-2*x^3"}, {"chi", "alt"}};
  th20.info.cases = {{{}, std::nullopt}, {{{"P", "x^4-x^2"}}, std::nullopt}, {{{"P", "x^4-2*x^3"}, {"chi", "jacobi:3"}}, std::nullopt}};

  Entry& cor21 = r.add("cor21", "the quadratic case P = a x^2 + b x of the signed divisor expansion", 200,
                       [th20_builder](const Params& p, int64_t N) {
                         int64_t a = p.integer("a"), b = p.integer("b");
                         if (a <= 0) throw BadParams("a must be positive");
                         return th20_builder(IntPoly{{0, b, a}}, p.chi("chi"), N);
                       });
  cor21.info.defaults = {{"a", "1"}, {"b", "-2"}, {"chi", "alt"}};
  cor21.info.cases = {{{}, std::nullopt}, {{{"a", "3"}, {"b", "-5"}, {"chi", "mu"}}, std::nullopt}};

  Entry& th29_1 = r.add(
      "th29_1", "sum_{n,m in Z} X(n,m) q^{n^2+m^2} = sum q^n sum_{2n-k^2=l^2} A(k,n) with the symmetrized X", 100,
      [](const Params& p, int64_t N) {
        BiPoly X = p.bipoly("X");
        int64_t b = isqrt(N) + 1;
        std::vector<Rational> c(N);
        for (int64_t x = -b; x <= b; ++x)
          for (int64_t y = -b; y <= b; ++y)
            if (x * x + y * y < N) c[x * x + y * y] += Rational(int_from(static_cast<int64_t>(X.eval(x, y))));
        auto val = [&](int64_t x, int64_t y) -> Rational { return Rational(int_from(static_cast<int64_t>(X.eval(x, y)))); };
        auto sym = [&](int64_t x, int64_t y) -> Rational { return (val(x, y) + val(y, x) + val(-x, -y) + val(-y, -x)) / 2; };
        Series rhs = seq_series(
            [&](int64_t n) -> Rational {
              Rational s = 0;
              for (int64_t k = -isqrt(2 * n); k <= isqrt(2 * n); ++k) {
                auto l = exact_root(2 * n - k * k, 2);
                if (!l || (k - *l) % 2 != 0) continue;
                if (*l == 0)
                  s += sym(-k / 2, k / 2) / 2;
                else
                  s += sym((-k - *l) / 2, (k - *l) / 2);
              }
              return s;
            },
            0, N);
        return Sides{Series(0, std::move(c), true), rhs};
      });
  th29_1.info.defaults = {{"X", "x^2+x*y+2*y+1"}};
  th29_1.info.cases = {{{}, std::nullopt}, {{{"X", "x*y"}}, std::nullopt}, {{{"X", "x^3*y+y^2+x"}}, std::nullopt}};

  Entry& th29_3 = r.add(
      "th29_3", "(sum_{n in Z} chi(n) q^{n^2})^2 with q -> q^16 equals sum C_chi(n) q^n", 48 * 16,
      [](const Params& p, int64_t N) {
        ArithSeq chi = p.chi("chi");
        if (chi(0) != 0 || chi(1) != 1) throw BadParams("chi must satisfy chi(0) = 0 and chi(1) = 1");
        int64_t M = (N + 15) / 16;
        Series t = poly_theta(IntPoly{{0, 0, 1}}, chi, Domain::Z, M);
        Series lhs = inflate(t * t, 16).truncate(N);
        Series rhs = seq_series(
            [&](int64_t n) -> Rational {
              Rational s = 0;
              for (int64_t m = -isqrt(2 * n); m <= isqrt(2 * n); ++m) {
                int64_t rest = 2 * n - m * m;
                if (rest == 0 && m % 8 == 0) s += chi(-m * m / 64);
                if (rest < 1 || m % 4 != 0) continue;
                auto l = exact_root(rest, 2);
                if (!l) continue;
                if ((((*l - m) % 8) + 8) % 8 == 0) s += 2 * chi((*l * *l - m * m) / 64);
              }
              return s;
            },
            0, N);
        return Sides{lhs, rhs};
      });
  th29_3.info.defaults = {{"chi", "liouville"}};
  th29_3.info.cases = {{{}, std::nullopt}, {{{"chi", "jacobi:3"}}, std::nullopt}, {{{"chi", "jacobi:5"}}, std::nullopt}};

  Entry& th29_2 = r.add(
      "th29_2", "(sum (-1)^n q^{(2pn+p-2a)^2})^2 = sum C(a,p,n) q^n under a chosen sign resolution", 600,
      [](const Params& p, int64_t N) {
        int64_t a = p.integer("a"), pp = p.integer("p");
        const std::string& mode = p.str("resolution");
        if (pp <= 0 || pp <= 2 * std::abs(a)) throw BadParams("need p > 0 and p > 2|a|");
        if (mode != "upper" && mode != "lower" && mode != "both") throw BadParams("resolution must be upper, lower or both");
        std::vector<Rational> c(N);
        for (int64_t n = -N;; ++n) {
          int64_t v = 2 * pp * n + pp - 2 * a;
          if (v * v >= N) {
            if (n > 0) break;
            continue;
          }
          c[v * v] += n % 2 == 0 ? 1 : -1;
        }
        Series t(0, std::move(c), true);
        auto mod = [](int64_t x, int64_t m) { return ((x % m) + m) % m; };
        Series rhs = seq_series(
            [&](int64_t n) -> Rational {
              Rational s = 0;
              for (int64_t k = -isqrt(2 * n); k <= isqrt(2 * n); ++k) {
                int64_t rest = 2 * n - k * k;
                if (rest < 1 || mod(k, 2 * pp) != 0) continue;
                auto l = exact_root(rest, 2);
                if (!l) continue;
                for (int sgn : {1, -1}) {
                  if (mode == "upper" && sgn < 0) continue;
                  if (mode == "lower" && sgn > 0) continue;
                  if (mod(*l - k, 4 * pp) != mod(2 * pp + sgn * 4 * a, 4 * pp)) continue;
                  int64_t num = 4 * a - sgn * *l;
                  if (num % (2 * pp) != 0) continue;
                  s -= (num / (2 * pp)) % 2 == 0 ? 1 : -1;
                }
              }
              return s;
            },
            0, N);
        return Sides{t * t, rhs};
      });
  th29_2.info.defaults = {{"a", "1"}, {"p", "5"}, {"resolution", "upper"}};
  th29_2.info.cases = {{{}, std::nullopt}, {{{"resolution", "lower"}}, std::nullopt}, {{{"resolution", "both"}}, std::nullopt}};
  th29_2.info.experimental = true;

  const ParamMap linear_defaults = {{"a1", "1"}, {"b1", "0"}, {"c1", "1"}, {"d1", "0"}, {"chi", "mu"}};
  const std::vector<IdentityCase> linear_cases = {
      {{}, std::nullopt}, {{{"a1", "2"}, {"b1", "1"}, {"c1", "1"}, {"d1", "1"}}, std::nullopt}};

  Entry& th37 = r.add("th37", "sum chi(n) q^{f(n)g1(n)}/(1-q^{f(n)}) = sum q^n sum_{d|n, f_i(d)>=1, n/d>=g1(f_i(d))} chi(f_i(d))",
                      200, [](const Params& p, int64_t N) {
                        LinearPair lp = linear_pair(p);
                        ArithSeq chi = p.chi("chi");
                        Series rhs = seq_series(
                            [&](int64_t n) -> Rational {
                              Rational s = 0;
                              if (n == 0) return s;
                              for (int64_t d : divisors(n))
                                for (int64_t k : preimages_pos(lp.f, d))
                                  if (n / d >= eval64(lp.g1, k)) s += chi(k);
                              return s;
                            },
                            0, N);
                        return Sides{linear_lerch(lp, chi, N), rhs};
                      });
  th37.info.defaults = linear_defaults;
  th37.info.cases = linear_cases;

  Entry& th38 = r.add("th38", "sum chi(n) q^{f(n)g1(n)}/(1-q^{f(n)}) = sum q^n sum_{k<=n, f(k)|n, n>=f(k)g1(k)} chi(k)", 200,
                      [](const Params& p, int64_t N) {
                        LinearPair lp = linear_pair(p);
                        ArithSeq chi = p.chi("chi");
                        Series rhs = seq_series(
                            [&](int64_t n) -> Rational {
                              Rational s = 0;
                              for (int64_t k = 1; k <= n; ++k) {
                                int64_t fk = eval64(lp.f, k);
                                if (fk >= 1 && n % fk == 0 && n >= fk * eval64(lp.g1, k)) s += chi(k);
                              }
                              return s;
                            },
                            0, N);
                        return Sides{linear_lerch(lp, chi, N), rhs};
                      });
  th38.info.defaults = linear_defaults;
  th38.info.cases = linear_cases;

  auto th38_prod_builder = [](const Params& p, int64_t N) {
    LinearPair lp = linear_pair(p);
    ArithSeq chi = p.chi("chi");
    Series lhs = exp_series(linear_lerch(lp, chi, N));
    Series rhs = linear_product(lp, chi, N, [](int64_t n, int64_t k, int64_t fi) { return n / k - fi >= 1; });
    return Sides{lhs, rhs};
  };
  Entry& th38_prod = r.add("th38_prod", "exp(phi(chi;q)) = prod (1-q^n)^{-X(n)} with the X_phi tail condition n/k - f_i(k) >= 1", 100,
                           th38_prod_builder);
  th38_prod.info.defaults = linear_defaults;
  th38_prod.info.defaults["a1"] = "2";
  th38_prod.info.defaults["b1"] = "1";
  th38_prod.info.defaults["d1"] = "1";
  th38_prod.info.cases = {{{}, std::nullopt}, {{{"chi", "one"}}, std::nullopt}};

  Entry& th38_prod_x = r.add("th38_prod_x", "the X_phi product form at g1(m) = m, where its tail condition is off by one", 100,
                             th38_prod_builder);
  th38_prod_x.info.defaults = linear_defaults;
  th38_prod_x.info.experimental = true;

  Entry& th39 = r.add("th39", "exp(sum chi(n) q^{f(n)g1(n)}/(1-q^{f(n)})) = prod (1-q^n)^{-X(n)} with X_0(n,k) = [n >= k g1(f_i(k))]",
                      100, [](const Params& p, int64_t N) {
                        LinearPair lp = linear_pair(p);
                        ArithSeq chi = p.chi("chi");
                        Series lhs = exp_series(linear_lerch(lp, chi, N));
                        Series rhs = linear_product(lp, chi, N, [&](int64_t n, int64_t k, int64_t fi) {
                          return n >= k * eval64(lp.g1, fi);
                        });
                        return Sides{lhs, rhs};
                      });
  th39.info.defaults = linear_defaults;
  th39.info.cases = linear_cases;

  const ParamMap th381_defaults = {{"f", "x+1"}, {"g1", "x"}, {"chi", "one"}, {"g", "id"}};
  const std::vector<IdentityCase> th381_cases = {
      {{}, std::nullopt}, {{{"f", "2*x+1"}, {"g1", "x+1"}, {"chi", "mu"}, {"g", "alt"}}, std::nullopt}};

  Entry& th38_1 = r.add(
      "th38_1", "sum_{n,l} q^{f(n)(l+g1(n))} chi(n) g(l)/l = sum q^n sum_{d|n} chi(f_i(d)) g(n/d-g1)/(n/d-g1)", 200,
      [](const Params& p, int64_t N) {
        Th381 t = th381_params(p);
        Series rhs = seq_series(
            [&](int64_t n) -> Rational {
              Rational s = 0;
              if (n == 0) return s;
              for (int64_t d : divisors(n))
                for (int64_t k : preimages_pos(t.f, d)) {
                  int64_t m = n / d - eval64(t.g1, k);
                  if (m >= 1) s += t.chi(k) * t.g(m) / m;
                }
              return s;
            },
            0, N);
        return Sides{th381_lhs(t, N), rhs};
      });
  th38_1.info.defaults = th381_defaults;
  th38_1.info.cases = th381_cases;

  Entry& th38_1_prod = r.add(
      "th38_1_prod", "exp(sum_{n,l} q^{f(n)(l+g1(n))} chi(n) g(l)/l) = prod (1-q^n)^{-X(n)}", 100, [](const Params& p, int64_t N) {
        Th381 t = th381_params(p);
        ArithSeq X("X", [&](int64_t n) -> Rational {
          Rational s = 0;
          for (int64_t d : divisors(n))
            for (int64_t k : preimages_pos(t.f, d))
              for (int64_t delta : divisors(n / d)) {
                int64_t m = delta - eval64(t.g1, k);
                int mu = moebius(n / d / delta);
                if (m >= 1 && mu != 0) s += R(d * delta * mu) * t.chi(k) * t.g(m) / m;
              }
          return -s / n;
        });
        return Sides{exp_series(th381_lhs(t, N)), product_expand(X, N)};
      });
  th38_1_prod.info.defaults = th381_defaults;
  th38_1_prod.info.cases = th381_cases;

  Entry& th38_1_count = r.add(
      "th38_1_count", "#{x,y >= 1 : f(x)(y+g1(x)) = n} = #{d|n : f_i(d) >= 1, n/d - g1(f_i(d)) >= 1}", 300,
      [](const Params& p, int64_t N) {
        IntPoly f = p.poly("f"), g1 = p.poly("g1");
        if (f.degree() < 1 || f.leading() <= 0) throw BadParams("f must be nonconstant with positive leading coefficient");
        Series lhs = seq_series(
            [&](int64_t n) -> Rational {
              int64_t c = 0;
              for (int64_t x = 1; x <= n; ++x) {
                int64_t fx = eval64(f, x);
                if (fx < 1 || fx > n) continue;
                for (int64_t y = 1; fx * (y + eval64(g1, x)) <= n; ++y)
                  if (fx * (y + eval64(g1, x)) == n) ++c;
              }
              return R(c);
            },
            1, N);
        Series rhs = seq_series(
            [&](int64_t n) -> Rational {
              int64_t c = 0;
              for (int64_t d : divisors(n))
                for (int64_t k : preimages_pos(f, d))
                  if (n / d - eval64(g1, k) >= 1) ++c;
              return R(c);
            },
            1, N);
        return Sides{lhs, rhs};
      });
  th38_1_count.info.kind = CheckKind::SeqEq;
  th38_1_count.info.defaults = {{"f", "x+1"}, {"g1", "x"}};
  th38_1_count.info.cases = {{{}, std::nullopt}, {{{"f", "2*x+1"}, {"g1", "x+1"}}, std::nullopt}, {{{"f", "x^2"}, {"g1", "x"}}, std::nullopt}};

  Entry& cor38_2 = r.add("cor38_2", "#{x,y >= 1 : x^nu + x y = n} = #{d|n : n/d - d^{nu-1} >= 1}", 500, [](const Params& p, int64_t N) {
    int64_t nu = p.integer("nu");
    if (nu < 1 || nu > 8) throw BadParams("nu must be between 1 and 8");
    Series lhs = seq_series(
        [&](int64_t n) -> Rational {
          int64_t c = 0;
          for (int64_t x = 1; x <= n; ++x) {
            __int128 xn = 1;
            for (int i = 0; i < nu; ++i) xn *= x;
            if (xn + x > n) break;
            if ((n - static_cast<int64_t>(xn)) % x == 0) ++c;
          }
          return R(c);
        },
        1, N);
    Series rhs = seq_series([&](int64_t n) -> Rational { return R(xnu_xy_count(n, static_cast<int>(nu))); }, 1, N);
    return Sides{lhs, rhs};
  });
  cor38_2.info.kind = CheckKind::SeqEq;
  cor38_2.info.defaults = {{"nu", "2"}};
  cor38_2.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}}, std::nullopt}};

  Entry& sigma_inv = r.add("sigma_inv", "(1/n) sum_{d|n} sigma_{nu-1}(d) mu(n/d) = n^{nu-2}", 300, [](const Params& p, int64_t N) {
     int64_t nu = p.integer("nu");
     if (nu < 1) throw BadParams("nu must be positive");
     Series lhs = seq_series(
         [&](int64_t n) -> Rational {
           Rational s = 0;
           for (int64_t d : divisors(n)) s += sigma_nu(d, nu - 1) * moebius(n / d);
           return s / n;
         },
         1, N);
     Series rhs = seq_series([&](int64_t n) -> Rational { return rational_pow(R(n), nu - 2); }, 1, N);
     return Sides{lhs, rhs};
   });
  sigma_inv.info.defaults = {{"nu", "4"}};
  sigma_inv.info.kind = CheckKind::SeqEq;
  sigma_inv.info.cases = {{{}, std::nullopt}, {{{"nu", "2"}}, std::nullopt}, {{{"nu", "3"}}, std::nullopt}, {{{"nu", "5"}}, std::nullopt}};
}

namespace {

const Registry& registry() {
  static const Registry reg = [] {
    Registry r;
    register_core(r);
    register_cubic(r);
    register_products(r);
    register_theta(r);
    return r;
  }();
  return reg;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : registry().entries())
    if (e.info.id == id) return e;
  throw UnknownIdentity("no identity registered as '" + id + "'");
}

struct Built {
  IdentityReport report;
  Sides sides;
};

Built build(const Entry& e, const ParamMap& params, std::optional<int64_t> order) {
  Params p(e.info.defaults, params);
  int64_t N = order.value_or(e.info.default_order);
  if (N < 2) throw BadParams("order must be at least 2");
  IdentityReport rep;
  rep.id = e.info.id;
  rep.params = p.values();
  rep.order = N;
  rep.experimental = e.info.experimental;
  rep.expect_fail = e.info.expect_fail;
  Sides s = e.build(p, N);
  rep.extra = s.extra;
  rep.note = s.note;
  return {rep, s};
}

void fill(IdentityReport& rep, const Series& lhs, const Series& rhs) {
  Comparison c = compare(lhs, rhs);
  rep.lo = c.lo;
  rep.hi = c.hi - 1;
  rep.equal = c.equal;
  rep.first_diff.reset();
  if (c.first_diff) rep.first_diff = FirstDiff{*c.first_diff, c.lhs_value, c.rhs_value};
}

}  // namespace

}  // namespace detail

std::vector<IdentityInfo> list_identities() {
  std::vector<IdentityInfo> out;
  for (const auto& e : detail::registry().entries()) out.push_back(e.info);
  std::sort(out.begin(), out.end(), [](const IdentityInfo& a, const IdentityInfo& b) { return a.id < b.id; });
  return out;
}

IdentityReport verify(const std::string& id, const ParamMap& params, std::optional<int64_t> order) {
  auto b = detail::build(detail::find_entry(id), params, order);
  detail::fill(b.report, b.sides.lhs, b.sides.rhs);
  return b.report;
}

MutationReport verify_with_mutation(const std::string& id, const ParamMap& params, std::optional<int64_t> order) {
  auto b = detail::build(detail::find_entry(id), params, order);
  detail::fill(b.report, b.sides.lhs, b.sides.rhs);
  MutationReport m;
  m.mutated_exp = b.report.lo + (b.report.hi - b.report.lo) / 2;
  Series rhs = b.sides.rhs.set_coeff(m.mutated_exp, b.sides.rhs.coeff(m.mutated_exp) + 1);
  detail::fill(b.report, b.sides.lhs, rhs);
  m.located = !b.report.equal && b.report.first_diff && b.report.first_diff->exp == m.mutated_exp;
  m.report = b.report;
  return m;
}

std::vector<IdentityReport> run_suite(const std::string& filter, std::optional<int64_t> order, unsigned threads) {
  struct Job {
    std::string id;
    ParamMap params;
    std::optional<int64_t> order;
  };
  std::vector<Job> jobs;
  for (const auto& info : list_identities()) {
    if (info.id.compare(0, filter.size(), filter) != 0) continue;
    std::vector<IdentityCase> cases = info.cases.empty() ? std::vector<IdentityCase>{{}} : info.cases;
    for (const auto& c : cases) jobs.push_back({info.id, c.params, order ? order : c.order});
  }
  std::vector<IdentityReport> out(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < jobs.size();) {
      try {
        out[i] = verify(jobs[i].id, jobs[i].params, jobs[i].order);
      } catch (const std::exception& e) {
        out[i].id = jobs[i].id;
        out[i].params = jobs[i].params;
        out[i].equal = false;
        out[i].note = std::string("error: ") + e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace qforms
