#include <numeric>

#include "identities_internal.hpp"
#include "qforms/errors.hpp"

namespace qforms::detail {

namespace {

Series exp_q(const Rational& c, int64_t prec) { return exp_series(Series::monomial(c, 1, prec)); }

ArithSeq seq(const std::string& id, ArithSeq::Fn fn) { return ArithSeq(id, std::move(fn)); }

int nu_param(const Params& p, int lo, int hi) {
  int64_t nu = p.integer("nu");
  if (nu < lo || nu > hi) throw BadParams("nu must be between " + std::to_string(lo) + " and " + std::to_string(hi));
  return static_cast<int>(nu);
}

IntPoly increasing_poly(const Params& p, const std::string& key) {
  IntPoly f = p.poly(key);
  if (f.degree() < 1 || f.leading() <= 0 || f.coeffs[0] != 0) throw BadParams(key + " must vanish at 0 and have positive leading coefficient");
  for (int64_t c : f.coeffs)
    if (c < 0) throw BadParams(key + " must have nonnegative coefficients");
  return f;
}

// sum_{n,l >= 1} w(n, l) q^{g(n) l}
Series double_sum(const IntPoly& g, const std::function<Rational(int64_t n, int64_t l)>& w, int64_t prec) {
  std::vector<Rational> c(prec);
  for (int64_t n = 1;; ++n) {
    int64_t gn = static_cast<int64_t>(g.eval(n));
    if (gn >= prec) break;
    for (int64_t l = 1; gn * l < prec; ++l) c[gn * l] += w(n, l);
  }
  return Series(0, std::move(c), true);
}

IntPoly monomial_poly(int k) {
  IntPoly p{std::vector<int64_t>(k + 1, 0)};
  p.coeffs[k] = 1;
  return p;
}

}  // namespace

void register_products(Registry& r) {
  const std::vector<IdentityCase> f_cases = {{{}, std::nullopt}, {{{"f", "mu"}}, std::nullopt}, {{{"f", "id"}}, std::nullopt}};

  Entry& prop3 = r.add("prop3", "exp(-sum f_n q^n / n) = prod (1-q^n)^{X(n)}, X(n) = (1/n) sum_{d|n} f_d mu(n/d)", 100,
                       [](const Params& p, int64_t N) {
                         ArithSeq f = p.chi("f");
                         Series lhs = exp_series(-seq_series([&](int64_t n) -> Rational { return n == 0 ? Rational(0) : f(n) / n; }, 0, N));
                         ArithSeq X = seq("X", [f](int64_t n) -> Rational {
                           Rational s = 0;
                           for (int64_t d : divisors(n)) s += f(d) * moebius(n / d);
                           return s / n;
                         });
                         return Sides{lhs, product_expand(X, N)};
                       });
  prop3.info.defaults = {{"f", "one"}};
  prop3.info.cases = f_cases;

  Entry& cor25 = r.add("cor25", "exp(-f(q)) = prod (1-q^n)^{(1/n) sum_{d|n} d f_d mu(n/d)} for f(u) = sum f_n u^n", 100,
                       [](const Params& p, int64_t N) {
                         ArithSeq f = p.chi("f");
                         Series lhs = exp_series(-seq_series([&](int64_t n) -> Rational { return n == 0 ? Rational(0) : f(n); }, 0, N));
                         ArithSeq X = seq("X", [f](int64_t n) -> Rational {
                           Rational s = 0;
                           for (int64_t d : divisors(n)) s += R(d) * f(d) * moebius(n / d);
                           return s / n;
                         });
                         return Sides{lhs, product_expand(X, N)};
                       });
  cor25.info.defaults = {{"f", "delta:1"}};
  cor25.info.cases = {{{}, std::nullopt}, {{{"f", "one"}}, std::nullopt}};

  Entry& th26 = r.add("th26", "exp(sum chi(n) q^{f(n)}) = prod (1-q^n)^{-X(n)}, X(n) = (1/n) sum_{f(k)|n} chi(k) f(k) mu(n/f(k))", 100,
                      [](const Params& p, int64_t N) {
                        IntPoly f = increasing_poly(p, "f");
                        ArithSeq chi = p.chi("chi");
                        ArithSeq X = seq("X", [f, chi](int64_t n) -> Rational {
                          Rational s = 0;
                          for (int64_t k = 1;; ++k) {
                            int64_t fk = static_cast<int64_t>(f.eval(k));
                            if (fk > n) break;
                            if (n % fk == 0) s += chi(k) * fk * moebius(n / fk);
                          }
                          return -s / n;
                        });
                        return Sides{exp_series(poly_theta(f, chi, Domain::N1, N).truncate(N)), product_expand(X, N)};
                      });
  th26.info.defaults = {{"f", "x^2"}, {"chi", "mu"}};
  th26.info.cases = {{{}, std::nullopt}, {{{"f", "x^2+x"}, {"chi", "jacobi:5"}}, std::nullopt}};

  Entry& th28 = r.add("th28", "exp(sum chi(n) q^{f(n)}) = prod (1-q^n)^{-X(n)}, X(n) = (1/n) sum_{d|n, f^{-1}(d) in N} chi(f^{-1}(d)) d mu(n/d)",
                      100, [](const Params& p, int64_t N) {
                        IntPoly f = increasing_poly(p, "f");
                        ArithSeq chi = p.chi("chi");
                        ArithSeq X = seq("X", [f, chi](int64_t n) -> Rational {
                          Rational s = 0;
                          for (int64_t d : divisors(n))
                            for (int64_t k : preimages_pos(f, d)) s += chi(k) * d * moebius(n / d);
                          return -s / n;
                        });
                        return Sides{exp_series(poly_theta(f, chi, Domain::N1, N).truncate(N)), product_expand(X, N)};
                      });
  th28.info.defaults = {{"f", "x^2"}, {"chi", "mu"}};
  th28.info.cases = {{{}, std::nullopt}, {{{"f", "x^3"}, {"chi", "liouville"}}, std::nullopt}};

  r.add("app4_i", "exp(sum_{n,l} mu(n) sigma_1(l)/l q^{n^2 l}) = prod (1-q^n)^{-|mu(n)|}", 100, [](const Params&, int64_t N) {
    Series lhs = exp_series(double_sum(monomial_poly(2), [](int64_t n, int64_t l) -> Rational { return sigma_nu(l, 1) * moebius(n) / l; }, N));
    ArithSeq X = seq("X", [](int64_t n) -> Rational { return Rational(-std::abs(moebius(n))); });
    return Sides{lhs, product_expand(X, N)};
  });

  Entry& app4g = r.add("app4_gen", "exp(sum q^n sum_{d|n} sigma_1(d)/d chi(f^{-1}(n/d))) = prod (1-q^n)^{-X(n)}, X(n) = sum_{f(d)|n} chi(d)",
                       100, [](const Params& p, int64_t N) {
                         IntPoly f = increasing_poly(p, "f");
                         ArithSeq chi = p.chi("chi");
                         Series inner = seq_series(
                             [&](int64_t n) -> Rational {
                               Rational s = 0;
                               if (n == 0) return s;
                               for (int64_t d : divisors(n))
                                 for (int64_t k : preimages_pos(f, n / d)) s += sigma_nu(d, 1) / d * chi(k);
                               return s;
                             },
                             0, N);
                         ArithSeq X = seq("X", [f, chi](int64_t n) -> Rational {
                           Rational s = 0;
                           for (int64_t k = 1;; ++k) {
                             int64_t fk = static_cast<int64_t>(f.eval(k));
                             if (fk > n) break;
                             if (n % fk == 0) s += chi(k);
                           }
                           return -s;
                         });
                         return Sides{exp_series(inner), product_expand(X, N)};
                       });
  app4g.info.defaults = {{"f", "x^2+x"}, {"chi", "jacobi:5"}};
  app4g.info.cases = {{{}, std::nullopt}, {{{"f", "x^2"}, {"chi", "mu"}}, std::nullopt}};

  Entry& prop4 = r.add("prop4", "exp(sum chi(n) q^{f(n)}/(1-q^{f(n)})) = prod (1-q^n)^{-X(n)} with X(n) = (1/n) sum_{k<=n} chi(f^{-1}(gcd(n,k))) gcd(n,k)",
                       100, [](const Params& p, int64_t N) {
                         IntPoly f = increasing_poly(p, "f");
                         ArithSeq chi = p.chi("chi");
                         std::vector<Rational> c(N);
                         for (int64_t n = 1;; ++n) {
                           int64_t fn = static_cast<int64_t>(f.eval(n));
                           if (fn >= N) break;
                           for (int64_t e = fn; e < N; e += fn) c[e] += chi(n);
                         }
                         ArithSeq X = seq("X", [f, chi](int64_t n) -> Rational {
                           Rational s = 0;
                           for (int64_t k = 1; k <= n; ++k) {
                             int64_t g = std::gcd(n, k);
                             for (int64_t x : preimages_pos(f, g)) s += chi(x) * g;
                           }
                           return -s / n;
                         });
                         return Sides{exp_series(Series(0, std::move(c), true)), product_expand(X, N)};
                       });
  prop4.info.defaults = {{"f", "x^2+x"}, {"chi", "jacobi:5"}};
  prop4.info.cases = {{{}, std::nullopt}, {{{"f", "x^2"}, {"chi", "mu"}}, std::nullopt}};

  Entry& th30 = r.add("th30", "exp(sum q^n/n^nu sum_{d|n} chi(d) d^{nu-1}) = prod (1-q^n)^{-(1/n) sum_{d|n} chi(d) h_{1-nu}(n/d)}", 100,
                      [](const Params& p, int64_t N) {
                        int nu = nu_param(p, 1, 8);
                        ArithSeq chi = p.chi("chi");
                        Series inner = seq_series(
                            [&](int64_t n) -> Rational {
                              Rational s = 0;
                              if (n == 0) return s;
                              for (int64_t d : divisors(n)) s += chi(d) * rational_pow(R(d), nu - 1);
                              return Rational(s / rational_pow(R(n), nu));
                            },
                            0, N);
                        ArithSeq X = seq("X", [chi, nu](int64_t n) -> Rational {
                          Rational s = 0;
                          for (int64_t d : divisors(n)) s += chi(d) * h_a(n / d, 1 - nu);
                          return -s / n;
                        });
                        return Sides{exp_series(inner), product_expand(X, N)};
                      });
  th30.info.defaults = {{"nu", "2"}, {"chi", "mu"}};
  th30.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}}, std::nullopt}};

  Entry& lemma32 = r.add("lemma32", "exp(sum_{n,l} q^{n^k l}/l^nu mu(n)/n^s sigma_{nu-1}(l)) = prod (1-q^n)^{-mu_{k,v}(n)/n^nu}, s = k nu + v", 100,
                         [](const Params& p, int64_t N) {
                           int64_t k = p.integer("k"), nu = p.integer("nu"), v = p.integer("v");
                           if (k < 1 || k > 6 || nu < 1 || nu > 6) throw BadParams("k and nu must be between 1 and 6");
                           int64_t s = k * nu + v;
                           Series lhs = exp_series(double_sum(
                               monomial_poly(static_cast<int>(k)),
                               [&](int64_t n, int64_t l) -> Rational {
                                 int m = moebius(n);
                                 if (m == 0) return Rational(0);
                                 return Rational(sigma_nu(l, nu - 1) * m / (rational_pow(R(l), nu) * rational_pow(R(n), s)));
                               },
                               N));
                           ArithSeq X = seq("X", [k, nu, v](int64_t n) -> Rational {
                             return -mu_kv(n, static_cast<int>(k), v) / rational_pow(R(n), nu);
                           });
                           return Sides{lhs, product_expand(X, N)};
                         });
  lemma32.info.defaults = {{"k", "2"}, {"nu", "2"}, {"v", "1"}};
  lemma32.info.cases = {{{}, std::nullopt}, {{{"k", "3"}, {"nu", "1"}, {"v", "0"}}, std::nullopt}};

  Entry& th33 = r.add("th33", "exp(sum_{n,l} q^{n^k l}/(n^v l) h(n) sum_{d|l} f(n^k d) d) = prod (1-q^n)^{-hat h_{k,v}(n) f(n)}", 100,
                      [](const Params& p, int64_t N) {
                        int64_t k = p.integer("k"), v = p.integer("v");
                        if (k < 1 || k > 6) throw BadParams("k must be between 1 and 6");
                        ArithSeq h = p.chi("h"), f = p.chi("f");
                        Series lhs = exp_series(double_sum(
                            monomial_poly(static_cast<int>(k)),
                            [&](int64_t n, int64_t l) -> Rational {
                              Rational s = 0;
                              int64_t nk = static_cast<int64_t>(ipow_sat(n, static_cast<int>(k)));
                              for (int64_t d : divisors(l)) s += f(nk * d) * d;
                              return s * h(n) / (rational_pow(R(n), v) * l);
                            },
                            N));
                        ArithSeq X = seq("X", [k, v, h, f](int64_t n) -> Rational {
                          Rational s = 0;
                          for (int64_t d = 1; ipow_sat(d, static_cast<int>(k)) <= n; ++d)
                            if (n % static_cast<int64_t>(ipow_sat(d, static_cast<int>(k))) == 0) s += h(d) / rational_pow(R(d), v);
                          return -s * f(n);
                        });
                        return Sides{lhs, product_expand(X, N)};
                      });
  th33.info.defaults = {{"k", "2"}, {"v", "1"}, {"h", "mu"}, {"f", "X_nu:2"}};
  th33.info.cases = {{{}, std::nullopt}, {{{"k", "3"}, {"v", "2"}, {"h", "liouville"}, {"f", "id"}}, std::nullopt}};

  Entry& th34 = r.add("th34", "exp(sum_{n,l} q^{g(n) l}/l h(n) sum_{d|l} f(g(n) d) d) = prod (1-q^n)^{-tilde h_g(n) f(n)}", 100,
                      [](const Params& p, int64_t N) {
                        IntPoly g = increasing_poly(p, "g");
                        ArithSeq h = p.chi("h"), f = p.chi("f");
                        Series lhs = exp_series(double_sum(
                            g,
                            [&](int64_t n, int64_t l) -> Rational {
                              Rational s = 0;
                              int64_t gn = static_cast<int64_t>(g.eval(n));
                              for (int64_t d : divisors(l)) s += f(gn * d) * d;
                              return s * h(n) / l;
                            },
                            N));
                        ArithSeq X = seq("X", [g, h, f](int64_t n) -> Rational {
                          Rational s = 0;
                          for (int64_t d = 1;; ++d) {
                            int64_t gd = static_cast<int64_t>(g.eval(d));
                            if (gd > n) break;
                            if (n % gd == 0) s += h(d);
                          }
                          return -s * f(n);
                        });
                        return Sides{lhs, product_expand(X, N)};
                      });
  th34.info.defaults = {{"g", "x"}, {"h", "mu"}, {"f", "X_nu:2"}};
  th34.info.cases = {{{}, std::nullopt}, {{{"g", "x^2+x"}, {"h", "jacobi:5"}, {"f", "id"}}, std::nullopt}};

  Entry& th44 = r.add("th44", "exp(q_integrate(phi_nu)) = prod (1-q^n)^{-lambda_nu(n)/n}", 100, [](const Params& p, int64_t N) {
    int nu = nu_param(p, 2, 8);
    Series lhs = exp_series(q_integrate(power_series(chi_from_id("one"), nu, N)));
    ArithSeq X = seq("X", [nu](int64_t n) -> Rational { return make_rational(-lambda_nu(n, nu), n); });
    return Sides{lhs, product_expand(X, N)};
  });
  th44.info.defaults = {{"nu", "2"}};
  th44.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}}, std::nullopt}};

  Entry& th45 = r.add("th45", "exp(sum chi(n) q^{n^nu}) = prod (1-q^n)^{-X(n)}, X(n) = (1/n) sum_{d^nu|n} chi(d) d^nu mu(n/d^nu)", 100,
                      [](const Params& p, int64_t N) {
                        int nu = nu_param(p, 2, 8);
                        ArithSeq chi = p.chi("chi");
                        ArithSeq X = seq("X", [chi, nu](int64_t n) -> Rational {
                          Rational s = 0;
                          for (int64_t d = 1; ipow_sat(d, nu) <= n; ++d) {
                            int64_t dn = static_cast<int64_t>(ipow_sat(d, nu));
                            if (n % dn == 0) s += chi(d) * dn * moebius(n / dn);
                          }
                          return -s / n;
                        });
                        return Sides{exp_series(power_series(chi, nu, N)), product_expand(X, N)};
                      });
  th45.info.defaults = {{"nu", "3"}, {"chi", "mu"}};
  th45.info.cases = {{{}, std::nullopt}, {{{"nu", "2"}, {"chi", "liouville"}}, std::nullopt}};

  Entry& th48 = r.add("th48", "exp(sum q^{n^nu}) = e^q prod (1-q^n)^{-c_nu(n)}", 64, [](const Params& p, int64_t N) {
    int nu = nu_param(p, 2, 8);
    ArithSeq X = seq("X", [nu](int64_t n) -> Rational { return -c_nu(n, nu); });
    Series rhs = exp_q(1, N) * product_expand(X, N);
    return Sides{exp_series(power_series(chi_from_id("one"), nu, N)), rhs};
  });
  th48.info.defaults = {{"nu", "3"}};
  th48.info.cases = {{{}, std::nullopt}, {{{"nu", "4"}}, 100}, {{{"nu", "5"}}, 250}};

  Entry& th50 = r.add("th50", "exp(sum chi(n) q^{n^nu}) = e^{chi(1) q} prod (1-q^n)^{-Y_nu(n)} with Y_nu in closed form", 100,
                      [](const Params& p, int64_t N) {
                        int nu = nu_param(p, 2, 8);
                        ArithSeq chi = p.chi("chi");
                        ArithSeq X = seq("X", [chi, nu](int64_t n) -> Rational { return -Y_nu_closed(n, nu, chi); });
                        Series rhs = exp_q(chi(1), N) * product_expand(X, N);
                        return Sides{exp_series(power_series(chi, nu, N)), rhs};
                      });
  th50.info.defaults = {{"nu", "3"}, {"chi", "mu"}};
  th50.info.cases = {{{}, std::nullopt}, {{{"nu", "2"}, {"chi", "jacobi:5"}}, std::nullopt}, {{{"nu", "3"}, {"chi", "const:2"}}, std::nullopt}};

  Entry& cor52 = r.add("cor52", "exp(sum chi(n) q^{n^2}) = e^{chi(1) q} prod (1-q^n)^{-Y(n)}, Y(n) = (1/n) sum_{d>1, d^2|n} chi(d) d^2 mu(n/d^2)",
                       100, [](const Params& p, int64_t N) {
                         ArithSeq chi = p.chi("chi");
                         ArithSeq X = seq("X", [chi](int64_t n) -> Rational { return -Y_nu(n, 2, chi); });
                         Series rhs = exp_q(chi(1), N) * product_expand(X, N);
                         return Sides{exp_series(power_series(chi, 2, N)), rhs};
                       });
  cor52.info.defaults = {{"chi", "one"}};
  cor52.info.cases = {{{}, std::nullopt}, {{{"chi", "liouville"}}, std::nullopt}};

  Entry& th60p = r.add("th60_prod", "exp(-q_integrate(sum chi(n) q^{n^nu})) = e^{(1-chi(1)) q} prod (1-q^n)^{C_nu(chi;n)/n}", 100,
                       [](const Params& p, int64_t N) {
                         int nu = nu_param(p, 2, 8);
                         ArithSeq chi = p.chi("chi");
                         Series lhs = exp_series(-q_integrate(power_series(chi, nu, N)));
                         ArithSeq X = seq("X", [chi, nu](int64_t n) -> Rational { return (moebius(n) + A_nu_closed(n, nu, chi)) / n; });
                         return Sides{lhs, exp_q(1 - chi(1), N) * product_expand(X, N)};
                       });
  th60p.info.defaults = {{"nu", "2"}, {"chi", "mu"}};
  th60p.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}, {"chi", "const:2"}}, std::nullopt}};
}

}  // namespace qforms::detail
