#include <numeric>

#include "identities_internal.hpp"
#include "qforms/errors.hpp"

namespace qforms::detail {

namespace {

Series cubes(const ArithSeq& w, int64_t prec) { return power_series(w, 3, prec); }

// d with d^3 = 4n, at most one.
std::vector<int64_t> half_diagonal(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d : divisors(n))
    if (static_cast<__int128>(d) * d * d == static_cast<__int128>(4) * n) out.push_back(d);
  return out;
}

// sum over ordered (a, b) >= 1 with a^3 + b^3 = n of w(a + b), via the divisor description.
Rational cubic_divisor_sum(int64_t n, const std::function<Rational(int64_t)>& w) {
  Rational s = 0;
  for (int64_t d : half_diagonal(n)) s += w(d);
  for (auto [d, k] : starred_divisors(n)) s += 2 * w(d);
  return s;
}

Series from_one(const std::function<Rational(int64_t)>& fn, int64_t prec) {
  return seq_series([&](int64_t n) -> Rational { return n == 0 ? Rational(0) : fn(n); }, 0, prec);
}

Rational conv_s(int64_t n, int a, int b) {
  Rational s = 0;
  for (int64_t k = 1; k < 2 * n; ++k) s += Rational(s_nu_fn(2 * n - k, a) * s_nu_fn(k, b));
  return s;
}

Rational s_val(int64_t n, int nu) { return Rational(s_nu_fn(n, nu)); }

}  // namespace

void register_cubic(Registry& r) {
  r.add("th5", "(sum_{n>=1} q^{n^3})^2 = sum r_3^+(n) q^n with the starred divisor count", 500, [](const Params&, int64_t N) {
    Series f = cubes(chi_from_id("one"), N);
    return Sides{f * f, from_one([](int64_t n) -> Rational { return R(r_plus3(n)); }, N)};
  });

  Entry& th6 = r.add("th6", "f(q^A) f(q^B) = sum s_AB(n) q^n with f = sum q^{n^3}", 300, [](const Params& p, int64_t N) {
    int64_t A = p.integer("A"), B = p.integer("B");
    if (A < 1 || B < 1 || std::gcd(A, B) != 1) throw BadParams("need coprime A, B >= 1");
    Series f = cubes(chi_from_id("one"), N);
    Series lhs = (inflate(f, A).truncate(N) * inflate(f, B).truncate(N));
    return Sides{lhs, s_cubic_AB_series(A, B, N)};
  });
  th6.info.defaults = {{"A", "1"}, {"B", "2"}};
  th6.info.cases = {{{}, std::nullopt}, {{{"A", "1"}, {"B", "1"}}, std::nullopt}, {{{"A", "2"}, {"B", "3"}}, std::nullopt}};

  Entry& th8 = r.add(
      "th8_sym", "sum_{n,m>=1} X(n,m) q^{n^3+m^3} = sum q^n [sum_{d^3=4n} X(d/2,d/2) + 2 sum* SymX(x-, x+)]", 500,
      [](const Params& p, int64_t N) {
        BiPoly X = p.bipoly("X");
        auto val = [&](const Rational& a, const Rational& b) {
          Rational s = 0;
          for (const auto& [ij, c] : X.terms) s += Rational(int_from(c)) * rational_pow(a, ij.first) * rational_pow(b, ij.second);
          return s;
        };
        std::vector<Rational> c(N);
        for (int64_t a = 1; a * a * a < N; ++a)
          for (int64_t b = 1; a * a * a + b * b * b < N; ++b) c[a * a * a + b * b * b] += val(R(a), R(b));
        Series rhs = from_one(
            [&](int64_t n) -> Rational {
              Rational s = 0;
              for (int64_t d : half_diagonal(n)) s += val(make_rational(d, 2), make_rational(d, 2));
              for (auto [d, k] : starred_divisors(n)) {
                Rational lo((d - k) / 2), hi((d + k) / 2);
                s += val(lo, hi) + val(hi, lo);
              }
              return s;
            },
            N);
        return Sides{Series(0, std::move(c), true), rhs};
      });
  th8.info.defaults = {{"X", "x*y"}};
  th8.info.cases = {{{}, std::nullopt}, {{{"X", "x^2-y^2-2*y-1"}}, std::nullopt}, {{{"X", "x^3*y+y"}}, std::nullopt}};

  Entry& th9 = r.add("th9", "sum 2^nu n^nu q^{2n^3} = sum s_nu(n) q^n", 2000, [](const Params& p, int64_t N) {
    int64_t nu = p.integer("nu");
    if (nu < 0) throw BadParams("nu must be nonnegative");
    Series lhs = power_sum([&](int64_t n) { return rational_pow(R(2 * n), nu); }, [](int64_t n) { return 2 * n * n * n; }, 1, N);
    return Sides{lhs, from_one([&](int64_t n) -> Rational { return s_val(n, static_cast<int>(nu)); }, N)};
  });
  th9.info.defaults = {{"nu", "2"}};
  th9.info.cases = {{{}, std::nullopt}, {{{"nu", "0"}}, std::nullopt}, {{{"nu", "3"}}, std::nullopt}};

  Entry& th10 = r.add("th10", "sigma*_0 = (r_3 - s_0)/2 and sigma*_1 = -s_1/2 + (1/2) sum_{k=1}^{2n} s_1(2n-k) s_0(k)", 400,
                      [](const Params& p, int64_t N) {
                        int64_t nu = p.integer("nu");
                        if (nu != 0 && nu != 1) throw BadParams("nu must be 0 or 1");
                        Series lhs = seq_series([&](int64_t n) -> Rational { return sigma_star(n, nu); }, 1, N);
                        Series rhs = seq_series(
                            [&](int64_t n) -> Rational {
                              if (nu == 0) return (R(r_plus3(n)) - s_val(n, 0)) / 2;
                              return (conv_s(n, 1, 0) - s_val(n, 1)) / 2;
                            },
                            1, N);
                        return Sides{lhs, rhs};
                      });
  th10.info.kind = CheckKind::SeqEq;
  th10.info.defaults = {{"nu", "0"}};
  th10.info.cases = {{{}, std::nullopt}, {{{"nu", "1"}}, std::nullopt}};

  Entry& th11 = r.add("th11", "sigma*_2 and sigma*_{-1} through convolutions of s_0, s_1, s_2", 400, [](const Params& p, int64_t N) {
    int64_t nu = p.integer("nu");
    if (nu != 2 && nu != -1) throw BadParams("nu must be 2 or -1");
    Series lhs = seq_series([&](int64_t n) -> Rational { return sigma_star(n, nu); }, 1, N);
    Series rhs = seq_series(
        [&](int64_t n) -> Rational {
          Rational s11 = conv_s(n, 1, 1), s10 = conv_s(n, 1, 0), s20 = conv_s(n, 2, 0);
          Rational common = s10 / 2 + s20 / 4 + R(r_plus3(n)) / 3 - s_val(n, 0) / 3 - s_val(n, 1) / 2 -
                            make_rational(2, 3) * sigma_star(n, 0) - sigma_star(n, 1);
          if (nu == 2) return Rational(s11 / 4 + common - s_val(n, 2) / 2);
          return Rational((common - s11 / 8 - s_val(n, 2) / 8) / n);
        },
        1, N);
    return Sides{lhs, rhs};
  });
  th11.info.kind = CheckKind::SeqEq;
  th11.info.defaults = {{"nu", "2"}};
  th11.info.cases = {{{}, std::nullopt}, {{{"nu", "-1"}}, std::nullopt}};

  r.add("th12", "(sum_{n>=1} (-1)^n q^{n^3})^2 = sum (-1)^n r_3^+(n) q^n", 500, [](const Params&, int64_t N) {
    Series f = cubes(chi_from_id("alt"), N);
    return Sides{f * f, from_one([](int64_t n) -> Rational { return R(n % 2 == 0 ? r_plus3(n) : -r_plus3(n)); }, N)};
  });

  Entry& th13 = r.add("th13", "sum f(2n) q^{2n^3} = sum s_f(n) q^n", 2000, [](const Params& p, int64_t N) {
    ArithSeq f = p.chi("f");
    Series lhs = power_sum([&](int64_t n) { return f(2 * n); }, [](int64_t n) { return 2 * n * n * n; }, 1, N);
    return Sides{lhs, from_one([&](int64_t n) -> Rational { return s_f(n, f); }, N)};
  });
  th13.info.defaults = {{"f", "id"}};
  th13.info.cases = {{{}, std::nullopt}, {{{"f", "sq"}}, std::nullopt}};

  const std::vector<IdentityCase> z_cases = {{{}, std::nullopt}, {{{"z", "2"}}, std::nullopt}, {{{"z", "1/3"}}, std::nullopt}};

  Entry& th15 = r.add("th15_2", "(sum_{n>=1} z^n q^{n^3})^2 = sum q^n [sum_{d^3=4n} z^d + 2 sum* z^d]", 500,
                      [](const Params& p, int64_t N) {
                        Rational z = p.rational("z");
                        if (z == 0) throw BadParams("z must be nonzero");
                        Series f = power_sum([&](int64_t n) { return rational_pow(z, n); }, [](int64_t n) { return n * n * n; }, 1, N);
                        Series rhs = from_one([&](int64_t n) -> Rational { return cubic_divisor_sum(n, [&](int64_t d) -> Rational { return rational_pow(z, d); }); }, N);
                        return Sides{f * f, rhs};
                      });
  th15.info.defaults = {{"z", "-1"}};
  th15.info.cases = z_cases;

  Entry& th16 = r.add("th16", "(sum_{n>=1} z^n q^{n^3})^2 = sum q^n sum_{d|n} z^d h(n, d, n/d)", 500, [](const Params& p, int64_t N) {
    Rational z = p.rational("z");
    if (z == 0) throw BadParams("z must be nonzero");
    Series f = power_sum([&](int64_t n) { return rational_pow(z, n); }, [](int64_t n) { return n * n * n; }, 1, N);
    Series rhs = from_one(
        [&](int64_t n) -> Rational {
          Rational s = 0;
          for (int64_t d : divisors(n)) s += rational_pow(z, d) * h_kuv(n, d, n / d);
          return s;
        },
        N);
    return Sides{f * f, rhs};
  });
  th16.info.defaults = {{"z", "-1"}};
  th16.info.cases = z_cases;

  const std::vector<IdentityCase> f_cases = {{{}, std::nullopt}, {{{"f", "mu"}}, std::nullopt}};

  Entry& th17 = r.add("th17_gen", "sum_{n,m>=1} f(n+m) q^{n^3+m^3} = sum q^n [sum_{A^3=4n} f(A) + 2 sum* f(A)]", 500,
                      [](const Params& p, int64_t N) {
                        ArithSeq f = p.chi("f");
                        std::vector<Rational> c(N);
                        for (int64_t a = 1; a * a * a < N; ++a)
                          for (int64_t b = 1; a * a * a + b * b * b < N; ++b) c[a * a * a + b * b * b] += f(a + b);
                        Series rhs = from_one([&](int64_t n) -> Rational { return cubic_divisor_sum(n, [&](int64_t d) -> Rational { return f(d); }); }, N);
                        return Sides{Series(0, std::move(c), true), rhs};
                      });
  th17.info.defaults = {{"f", "id"}};
  th17.info.cases = f_cases;

  Entry& th17h = r.add("th17_h", "sum_{d|n} f(d) h(n, d, n/d) = sum_{A^3=4n} f(A) + 2 sum* f(A)", 2000, [](const Params& p, int64_t N) {
    ArithSeq f = p.chi("f");
    Series lhs = seq_series(
        [&](int64_t n) -> Rational {
          Rational s = 0;
          for (int64_t d : divisors(n)) s += f(d) * h_kuv(n, d, n / d);
          return s;
        },
        1, N);
    Series rhs = seq_series([&](int64_t n) -> Rational { return cubic_divisor_sum(n, [&](int64_t d) -> Rational { return f(d); }); }, 1, N);
    return Sides{lhs, rhs};
  });
  th17h.info.kind = CheckKind::SeqEq;
  th17h.info.defaults = {{"f", "id"}};
  th17h.info.cases = f_cases;

  Entry& app3 = r.add("app3", "sum_{n,m>=1, (n,m)=1} f(n+m) q^{n^3+m^3} = sum q^n sum_{d|n} f(d) h*(n, d, n/d)", 500,
                      [](const Params& p, int64_t N) {
                        ArithSeq f = p.chi("f");
                        std::vector<Rational> c(N);
                        for (int64_t a = 1; a * a * a < N; ++a)
                          for (int64_t b = 1; a * a * a + b * b * b < N; ++b)
                            if (std::gcd(a, b) == 1) c[a * a * a + b * b * b] += f(a + b);
                        Series rhs = from_one(
                            [&](int64_t n) -> Rational {
                              Rational s = 0;
                              for (int64_t d : divisors(n)) s += f(d) * h_star(n, d, n / d);
                              return s;
                            },
                            N);
                        return Sides{Series(0, std::move(c), true), rhs};
                      });
  app3.info.defaults = {{"f", "id"}};
  app3.info.cases = f_cases;
}

}  // namespace qforms::detail
