#include <numeric>

#include "identities_internal.hpp"
#include "qforms/errors.hpp"

namespace qforms::detail {

namespace {

int nu_param(const Params& p, int lo, int hi) {
  int64_t nu = p.integer("nu");
  if (nu < lo || nu > hi) throw BadParams("nu must be between " + std::to_string(lo) + " and " + std::to_string(hi));
  return static_cast<int>(nu);
}

// sum_{n in Z} w(n) q^{|n|^nu}
Series abs_power_theta(int nu, const std::function<Rational(int64_t)>& w, int64_t prec) {
  std::vector<Rational> c(prec);
  c[0] += w(0);
  for (int64_t n = 1; ipow_sat(n, nu) < prec; ++n) {
    int64_t e = static_cast<int64_t>(ipow_sat(n, nu));
    c[e] += w(n) + w(-n);
  }
  return Series(0, std::move(c), true);
}

// c0 + c1 q + 2 * Lambert(a)
Series lambert_form(const Rational& c0, const Rational& c1, const ArithSeq& a, int64_t prec) {
  return Series::polynomial({c0, c1}, prec) + scale(lambert(a, prec), 2);
}

ArithSeq seq(const std::string& id, ArithSeq::Fn fn) { return ArithSeq(id, std::move(fn)); }

// A(chi, f; n) = sum_{d|n} sum_{f(delta)|d} chi(delta) mu(d/f(delta))
Rational divisor_expansion(const IntPoly& f, const ArithSeq& chi, int64_t n) {
  Rational s = 0;
  for (int64_t d : divisors(n))
    for (int64_t delta = 1;; ++delta) {
      int64_t fd = static_cast<int64_t>(f.eval(delta));
      if (fd > d) break;
      if (d % fd == 0) s += chi(delta) * moebius(d / fd);
    }
  return s;
}

IntPoly increasing_poly(const Params& p, const std::string& key) {
  IntPoly f = p.poly(key);
  if (f.degree() < 1 || f.leading() <= 0 || f.coeffs[0] != 0) throw BadParams(key + " must vanish at 0 and have positive leading coefficient");
  for (int64_t c : f.coeffs)
    if (c < 0) throw BadParams(key + " must have nonnegative coefficients");
  return f;
}

// prod_{k>=0} (1 - q^{r + k p})^{sign}
Series pochhammer(int64_t r, int64_t p, int sign, int64_t prec) {
  ArithSeq e = seq("poch", [r, p, sign](int64_t n) -> Rational { return Rational(((n - r) % p == 0 && n >= r) ? sign : 0); });
  return product_expand(e, prec);
}

}  // namespace

void register_theta(Registry& r) {
  auto th47_builder = [](bool corrupt) {
    return [corrupt](const Params& p, int64_t N) {
      int nu = nu_param(p, 2, 8);
      ArithSeq lam = seq("lambda", [nu, corrupt](int64_t n) -> Rational {
        int v = lambda_nu(n, nu);
        if (corrupt && n == (int64_t{1} << nu)) v = -v;
        return Rational(v);
      });
      return Sides{power_series(chi_from_id("one"), nu, N), lambert(lam, N)};
    };
  };
  Entry& th47 = r.add("th47", "phi_nu = sum q^{n^nu} = sum lambda_nu(n) q^n/(1-q^n)", 64, th47_builder(false));
  th47.info.defaults = {{"nu", "3"}};
  th47.info.cases = {{{}, std::nullopt}, {{{"nu", "2"}}, std::nullopt}, {{{"nu", "4"}}, 200}};

  Entry& th47c = r.add("th47_corrupted", "negative control: the Lambert side with lambda_nu(2^nu) negated", 64, th47_builder(true));
  th47c.info.defaults = {{"nu", "3"}};
  th47c.info.expect_fail = true;

  Entry& th51 = r.add("th51", "sum chi(n) q^{n^nu} = chi(1) q + sum A_nu(n) q^n/(1-q^n)", 200, [](const Params& p, int64_t N) {
    int nu = nu_param(p, 2, 8);
    ArithSeq chi = p.chi("chi");
    ArithSeq A = seq("A", [chi, nu](int64_t n) -> Rational { return A_nu_closed(n, nu, chi); });
    return Sides{power_series(chi, nu, N), Series::monomial(chi(1), 1, N) + lambert(A, N)};
  });
  th51.info.defaults = {{"nu", "2"}, {"chi", "mu"}};
  th51.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}, {"chi", "jacobi:5"}}, std::nullopt}, {{{"nu", "2"}, {"chi", "id"}}, std::nullopt}};

  Entry& th51iii = r.add("th51_iii", "for even chi: sum_{n in Z} chi(n) q^{|n|^nu} = chi(0) + 2 chi(1) q + 2 sum A_nu(n) q^n/(1-q^n)", 200,
                         [](const Params& p, int64_t N) {
                           int nu = nu_param(p, 2, 8);
                           ArithSeq chi = p.chi("chi");
                           for (int64_t n = 1; n <= 32; ++n)
                             if (chi(n) != chi(-n)) throw BadParams("chi must be even");
                           ArithSeq A = seq("A", [chi, nu](int64_t n) -> Rational { return A_nu_closed(n, nu, chi); });
                           Series lhs = abs_power_theta(nu, [&](int64_t n) -> Rational { return chi(n); }, N);
                           return Sides{lhs, lambert_form(chi(0), 2 * chi(1), A, N)};
                         });
  th51iii.info.defaults = {{"nu", "2"}, {"chi", "one"}};
  th51iii.info.cases = {{{}, std::nullopt}, {{{"chi", "jacobi:5"}}, std::nullopt}, {{{"nu", "3"}, {"chi", "sq"}}, std::nullopt}};

  r.add("cor53", "theta3 = 1 + 2q + 2 sum mu_2(n) q^n/(1-q^n)", 200, [](const Params&, int64_t N) {
    return Sides{theta_series(1, 0, false, N), lambert_form(1, 2, chi_from_id("mu_nu:2"), N)};
  });

  Entry& th54 = r.add("th54", "sum_{n in Z} q^{|n|^nu} = 1 + 2q + 2 sum mu_nu(n) q^n/(1-q^n)", 200, [](const Params& p, int64_t N) {
    int nu = nu_param(p, 2, 8);
    Series lhs = abs_power_theta(nu, [](int64_t) { return Rational(1); }, N);
    return Sides{lhs, lambert_form(1, 2, chi_from_id("mu_nu:" + std::to_string(nu)), N)};
  });
  th54.info.defaults = {{"nu", "2"}};
  th54.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}}, std::nullopt}};

  r.add("cor55", "theta4 = 1 - 2q + 2 sum mu*_2(n) q^n/(1-q^n)", 200, [](const Params&, int64_t N) {
    return Sides{theta_series(1, 0, true, N), lambert_form(1, -2, chi_from_id("mu_star_nu:2"), N)};
  });

  Entry& th56 = r.add("th56", "sum_{n in Z} (-1)^n q^{|n|^nu} = 1 - 2q + 2 sum mu*_nu(n) q^n/(1-q^n)", 200, [](const Params& p, int64_t N) {
    int nu = nu_param(p, 2, 8);
    Series lhs = abs_power_theta(nu, [](int64_t n) -> Rational { return Rational(n % 2 == 0 ? 1 : -1); }, N);
    return Sides{lhs, lambert_form(1, -2, chi_from_id("mu_star_nu:" + std::to_string(nu)), N)};
  });
  th56.info.defaults = {{"nu", "2"}};
  th56.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}}, std::nullopt}};

  Entry& th60 = r.add("th60", "sum chi(n) q^{f(n)} = sum q^n sum_{d|n} sum_{f(delta)|d} chi(delta) mu(d/f(delta))", 200,
                      [](const Params& p, int64_t N) {
                        IntPoly f = increasing_poly(p, "f");
                        ArithSeq chi = p.chi("chi");
                        Series rhs = seq_series([&](int64_t n) -> Rational { return n == 0 ? Rational(0) : divisor_expansion(f, chi, n); }, 0, N);
                        return Sides{poly_theta(f, chi, Domain::N1, N).truncate(N), rhs};
                      });
  th60.info.defaults = {{"f", "x^2"}, {"chi", "mu"}};
  th60.info.cases = {{{}, std::nullopt}, {{{"f", "x^3+x"}, {"chi", "liouville"}}, std::nullopt}};

  Entry& th60nu = r.add("th60_nu", "sum chi(n) q^{n^nu} = sum q^n sum_{d|n} chi(n1(d)) mu(n2(d))", 200, [](const Params& p, int64_t N) {
    int nu = nu_param(p, 2, 8);
    ArithSeq chi = p.chi("chi");
    Series rhs = seq_series([&](int64_t n) -> Rational { return A_star_nu(n, nu, chi); }, 0, N);
    return Sides{power_series(chi, nu, N), rhs};
  });
  th60nu.info.defaults = {{"nu", "2"}, {"chi", "mu"}};
  th60nu.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}, {"chi", "liouville"}}, std::nullopt}};

  Entry& th60c = r.add("th60_collapse", "sum_{d|n} chi(n1(d)) mu(n2(d)) = chi(m) if n = m^nu, else 0", 2000, [](const Params& p, int64_t N) {
    int nu = nu_param(p, 2, 8);
    ArithSeq chi = p.chi("chi");
    Series lhs = seq_series([&](int64_t n) -> Rational { return A_star_nu(n, nu, chi); }, 1, N);
    Series rhs = seq_series(
        [&](int64_t n) -> Rational {
          auto m = exact_root(n, nu);
          return m ? chi(*m) : Rational(0);
        },
        1, N);
    return Sides{lhs, rhs};
  });
  th60c.info.kind = CheckKind::SeqEq;
  th60c.info.defaults = {{"nu", "2"}, {"chi", "mu"}};
  th60c.info.cases = {{{}, std::nullopt}, {{{"nu", "3"}, {"chi", "jacobi:5"}}, std::nullopt}, {{{"nu", "4"}, {"chi", "id"}}, std::nullopt}};

  Entry& th64 = r.add("th64", "(sum chi(n) q^{f(n)})(sum psi(n) q^{g(n)}) = sum q^n sum_{n1+n2=n} A(chi,f;n1) B(psi,g;n2)", 300,
                      [](const Params& p, int64_t N) {
                        IntPoly f = increasing_poly(p, "f"), g = increasing_poly(p, "g");
                        ArithSeq chi = p.chi("chi"), psi = p.chi("psi");
                        Series lhs = poly_theta(f, chi, Domain::N1, N).truncate(N) * poly_theta(g, psi, Domain::N1, N).truncate(N);
                        std::vector<Rational> A(N), B(N);
                        for (int64_t n = 1; n < N; ++n) {
                          A[n] = divisor_expansion(f, chi, n);
                          B[n] = divisor_expansion(g, psi, n);
                        }
                        Series rhs = seq_series(
                            [&](int64_t n) -> Rational {
                              Rational s = 0;
                              for (int64_t n1 = 1; n1 < n; ++n1) s += A[n1] * B[n - n1];
                              return s;
                            },
                            0, N);
                        return Sides{lhs, rhs};
                      });
  th64.info.defaults = {{"f", "x^2"}, {"chi", "one"}, {"g", "x^3"}, {"psi", "one"}};
  th64.info.cases = {{{}, std::nullopt}, {{{"chi", "mu"}, {"psi", "jacobi:3"}}, std::nullopt}};

  r.add("eq166", "sum_{n in Z} (-1)^n q^{(8n+3)^2} = sum_{m = 3 mod 8} (-1)^{(m-3)/8} q^{m^2}", 842, [](const Params&, int64_t N) {
    std::vector<Rational> c(N);
    for (int64_t n = -isqrt(N) - 1; n <= isqrt(N) + 1; ++n) {
      int64_t m = 8 * n + 3;
      if (m * m < N) c[m * m] += n % 2 == 0 ? 1 : -1;
    }
    Series rhs = poly_theta(IntPoly{{0, 0, 1}}, chi_from_id("signed_res:3:8"), Domain::Z, N);
    return Sides{Series(0, std::move(c), true), rhs};
  });

  r.add("eq166_printed", "sum_{n in Z} (-1)^n q^{(8n+3)^2} = q^9 - q^25 - q^121 + q^169 + q^361 - q^441 - q^729 + q^841 + ...", 842,
        [](const Params&, int64_t N) {
          Series lhs = poly_theta(IntPoly{{0, 0, 1}}, chi_from_id("signed_res:3:8"), Domain::Z, N);
          const std::vector<std::pair<int64_t, int>> listed = {{9, 1},    {25, -1},  {121, -1}, {169, 1},
                                                                {361, 1}, {441, -1}, {729, -1}, {841, 1}};
          int64_t M = std::min<int64_t>(N, 842);
          std::vector<Rational> c(M);
          for (auto [e, s] : listed)
            if (e < M) c[e] = s;
          return Sides{lhs, Series(0, std::move(c), true), {}, "the listed expansion is known through q^841"};
        });

  Entry& th67 = r.add("th67", "prod (1-q^n)^{(n|G)} = prod_{j=1}^{[(G-1)/2]} theta(G/2, G/2-j; q)^{(j|G)}", 200, [](const Params& p, int64_t N) {
    int64_t G = p.integer("G");
    if (G < 3 || G % 2 == 0) throw BadParams("G must be odd and at least 3");
    ArithSeq sym = seq("jacobi", [G](int64_t n) -> Rational { return Rational(jacobi_symbol(n, G)); });
    Series rhs = Series::one(N);
    Rational A = 0;
    for (int64_t j = 1; j <= (G - 1) / 2; ++j) {
      int s = jacobi_symbol(j, G);
      A += (make_rational(-j, 2) + make_rational(j * j, 2 * G) + make_rational(G, 12)) * s;
      if (s == 0) continue;
      Series t = theta_series(make_rational(G, 2), make_rational(G - 2 * j, 2), true, N);
      rhs = rhs * (s > 0 ? t : inverse(t));
    }
    return Sides{product_expand(sym, N), rhs, {{"A", to_string(A)}}};
  });
  th67.info.defaults = {{"G", "5"}};
  th67.info.cases = {{{}, std::nullopt}, {{{"G", "13"}}, std::nullopt}};

  auto th71_builder = [](bool literal) {
    return [literal](const Params& p, int64_t N) {
      int64_t a = p.integer("a"), b = p.integer("b"), pp = p.integer("p");
      if (!(0 < a && a < b && a + b < pp)) throw BadParams("need 0 < a < b < a + b < p");
      Series lhs = pochhammer(a, pp, 1, N) * pochhammer(pp - a, pp, 1, N) * inverse(pochhammer(b, pp, 1, N) * pochhammer(pp - b, pp, 1, N));
      ArithSeq X = seq("X", [=](int64_t n) -> Rational {
        int64_t m = n % pp;
        if (literal) {
          if (m == a || m == b) return Rational(1);
          if (m == pp - a || m == pp - b) return Rational(-1);
          return Rational(0);
        }
        if (m == a || m == pp - a) return Rational(1);
        if (m == b || m == pp - b) return Rational(-1);
        return Rational(0);
      });
      Rational A = make_rational(-(a - b), 2) + make_rational(a * a - b * b, 2 * pp);
      return Sides{lhs, product_expand(X, N), {{"A", to_string(A)}}};
    };
  };
  Entry& th71 = r.add("th71_form", "(q^a;q^p)(q^{p-a};q^p)/((q^b;q^p)(q^{p-b};q^p)) = prod (1-q^n)^{X(a,b;p;n)}", 200, th71_builder(false));
  th71.info.defaults = {{"a", "1"}, {"b", "2"}, {"p", "5"}};
  th71.info.cases = {{{}, std::nullopt}, {{{"a", "1"}, {"b", "3"}, {"p", "7"}}, std::nullopt}};

  Entry& th71l = r.add("th71_form_literal", "the same quotient against the sign table as printed (+1 at a, b; -1 at p-a, p-b)", 200,
                       th71_builder(true));
  th71l.info.defaults = {{"a", "1"}, {"b", "2"}, {"p", "5"}};
  th71l.info.experimental = true;
}

}  // namespace qforms::detail
