#include "qforms/repcount.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "qforms/arith.hpp"
#include "qforms/errors.hpp"

namespace qforms {

namespace {

BigInt eval_big(const IntPoly& p, int64_t x) {
  BigInt acc = 0;
  BigInt bx = int_from(x);
  for (int i = p.degree(); i >= 0; --i) acc = acc * bx + int_from(p.coeffs[i]);
  return acc;
}

bool in_domain(Domain d, int64_t x) {
  switch (d) {
    case Domain::N1: return x >= 1;
    case Domain::N0: return x >= 0;
    case Domain::Z: return true;
  }
  return false;
}

// Beyond this radius the polynomial is monotone (Cauchy bound of P').
int64_t monotone_radius(const IntPoly& p) {
  IntPoly dp = p.derivative();
  if (dp.degree() < 1) return 1;
  __int128 mx = 0;
  __int128 lead = dp.leading() < 0 ? -static_cast<__int128>(dp.leading()) : dp.leading();
  for (int i = 0; i < dp.degree(); ++i) {
    __int128 c = dp.coeffs[i] < 0 ? -static_cast<__int128>(dp.coeffs[i]) : dp.coeffs[i];
    mx = std::max(mx, (c + lead - 1) / lead);
  }
  return static_cast<int64_t>(mx) + 2;
}

bool bounded_below(const IntPoly& p, Domain d) {
  if (p.degree() < 1) return true;
  if (p.leading() < 0) return false;
  return d != Domain::Z || p.degree() % 2 == 0;
}

// All x in the domain with P(x) <= limit, for P bounded below on the domain.
std::vector<int64_t> values_up_to(const IntPoly& p, Domain d, __int128 limit) {
  std::vector<int64_t> xs;
  if (p.degree() < 1) throw UnboundedEnumeration("variable does not occur in the form");
  int64_t r = monotone_radius(p);
  int64_t lo = d == Domain::N1 ? 1 : d == Domain::N0 ? 0 : -r;
  int64_t hi_start = std::max(lo, r);
  for (int64_t x = lo; x < hi_start; ++x)
    if (p.eval(x) <= limit) xs.push_back(x);
  for (int64_t x = hi_start;; ++x) {
    if (p.eval(x) > limit) break;
    xs.push_back(x);
  }
  if (d == Domain::Z)
    for (int64_t x = lo - 1;; --x) {
      if (p.eval(x) > limit) break;
      xs.push_back(x);
    }
  std::sort(xs.begin(), xs.end());
  return xs;
}

__int128 min_value(const IntPoly& p, Domain d) {
  int64_t r = monotone_radius(p);
  int64_t lo = d == Domain::N1 ? 1 : d == Domain::N0 ? 0 : -r;
  __int128 m = p.eval(std::max(lo, r));
  for (int64_t x = lo; x <= std::max(lo, r); ++x) m = std::min(m, p.eval(x));
  return m;
}

using ValueMap = std::map<__int128, std::vector<int64_t>>;

void add_witnesses(const std::vector<char>& vars, const std::vector<ValueMap>& maps, size_t i, __int128 remaining,
                   std::vector<int64_t>& cur, CountResult& out, int64_t cap) {
  if (static_cast<int64_t>(out.witnesses.size()) >= cap) return;
  if (i + 1 == vars.size()) {
    auto it = maps[i].find(remaining);
    if (it == maps[i].end()) return;
    for (int64_t x : it->second) {
      cur.push_back(x);
      out.witnesses.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (const auto& [v, xs] : maps[i]) {
    for (int64_t x : xs) {
      cur.push_back(x);
      add_witnesses(vars, maps, i + 1, remaining - v, cur, out, cap);
      cur.pop_back();
    }
  }
}

CountResult count_sum(const FormSpec& form, int64_t n, bool want) {
  CountResult res;
  res.n = n;
  const __int128 target = static_cast<__int128>(n) - form.constant;
  auto vars = form.variables();
  std::vector<const FormPart*> parts;
  for (char v : vars)
    for (const auto& p : form.parts)
      if (p.var == v) parts.push_back(&p);

  // x^3 + y^3 over the integers: x^2 - xy + y^2 <= n bounds both variables.
  if (parts.size() == 2 && parts[0]->poly.coeffs == parts[1]->poly.coeffs && parts[0]->poly.degree() == 3 &&
      parts[0]->domain == Domain::Z && parts[1]->domain == Domain::Z) {
    const IntPoly& p = parts[0]->poly;
    bool pure = p.leading() > 0 && p.coeffs[0] == 0 && p.coeffs[1] == 0 && p.coeffs[2] == 0;
    if (pure && target != 0) {
      __int128 m = target < 0 ? -target : target;
      if (m % p.leading() != 0) return res;
      int64_t mm = static_cast<int64_t>(m / p.leading());
      int64_t b = 2 * (isqrt((mm + 2) / 3) + 1) + 1;
      for (int64_t x = -b; x <= b; ++x)
        for (int64_t y = -b; y <= b; ++y)
          if (p.eval(x) + p.eval(y) == target) {
            ++res.count;
            if (want) res.witnesses.push_back({x, y});
          }
      return res;
    }
  }

  std::vector<__int128> lows;
  for (const auto* p : parts) {
    if (!bounded_below(p->poly, p->domain))
      throw UnboundedEnumeration("no finite enumeration bound for variable " + std::string(1, p->var) + " in " + form.str());
    lows.push_back(min_value(p->poly, p->domain));
  }
  __int128 total_low = std::accumulate(lows.begin(), lows.end(), static_cast<__int128>(0));
  std::vector<ValueMap> maps;
  for (size_t i = 0; i < parts.size(); ++i) {
    __int128 limit = target - (total_low - lows[i]);
    ValueMap m;
    if (limit >= lows[i])
      for (int64_t x : values_up_to(parts[i]->poly, parts[i]->domain, limit)) m[parts[i]->poly.eval(x)].push_back(x);
    maps.push_back(std::move(m));
  }
  // fold: counts of partial sums
  std::map<__int128, int64_t> acc{{0, 1}};
  __int128 low_rest = total_low;
  for (size_t i = 0; i < maps.size(); ++i) {
    low_rest -= lows[i];
    std::map<__int128, int64_t> next;
    for (const auto& [s, c] : acc)
      for (const auto& [v, xs] : maps[i]) {
        __int128 t = s + v;
        if (t + low_rest > target) break;
        next[t] += c * static_cast<int64_t>(xs.size());
      }
    acc.swap(next);
  }
  auto it = acc.find(target);
  res.count = it == acc.end() ? 0 : it->second;
  if (want) {
    std::vector<int64_t> cur;
    add_witnesses(vars, maps, 0, target, cur, res, 100000);
    std::sort(res.witnesses.begin(), res.witnesses.end());
  }
  return res;
}

CountResult count_product(const FormSpec& form, int64_t n, bool want) {
  CountResult res;
  res.n = n;
  const ProductTerm& pt = *form.product;
  const __int128 target = static_cast<__int128>(n) - form.constant;
  Domain d1 = form.domain_of(pt.var1), d2 = form.domain_of(pt.var2);
  if (target == 0) {
    if (d1 == Domain::N1 && d2 == Domain::N1) return res;
    throw UnboundedEnumeration("x^a*y^b = 0 has infinitely many solutions when a domain contains 0");
  }
  if (target < -(static_cast<__int128>(1) << 62) || target > (static_cast<__int128>(1) << 62))
    throw UnboundedEnumeration("target too large");
  int64_t t = static_cast<int64_t>(target);
  IntPoly g{std::vector<int64_t>(pt.exp2 + 1, 0)};
  g.coeffs.back() = 1;
  int64_t at = t < 0 ? -t : t;
  int64_t bound = iroot(at, pt.exp1);
  for (int64_t x = -bound; x <= bound; ++x) {
    if (x == 0 || !in_domain(d1, x)) continue;
    __int128 fx = static_cast<__int128>(pt.coeff) * ipow_sat(x, pt.exp1);
    if (fx == 0 || target % fx != 0) continue;
    int64_t rest = static_cast<int64_t>(target / fx);
    for (int64_t y : integer_roots(IntPoly{[&] {
           auto c = g.coeffs;
           c[0] -= rest;
           return c;
         }()})) {
      if (!in_domain(d2, y)) continue;
      ++res.count;
      if (want) res.witnesses.push_back(pt.var1 < pt.var2 ? std::vector<int64_t>{x, y} : std::vector<int64_t>{y, x});
    }
  }
  std::sort(res.witnesses.begin(), res.witnesses.end());
  return res;
}

CountResult count_positive_mixed(const FormSpec& form, int64_t n, bool want) {
  CountResult res;
  res.n = n;
  auto vars = form.variables();
  bool ok = form.product->coeff > 0;
  for (const auto& p : form.parts) {
    if (p.domain != Domain::N1) ok = false;
    for (int64_t c : p.poly.coeffs)
      if (c < 0) ok = false;
  }
  if (!ok) throw UnboundedEnumeration("mixed forms are enumerable only with nonnegative coefficients over N1: " + form.str());
  const __int128 target = n;
  std::vector<int64_t> cur(vars.size(), 1);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == vars.size()) {
      if (form.eval(cur) == target) {
        ++res.count;
        if (want) res.witnesses.push_back(cur);
      }
      return;
    }
    for (int64_t x = 1;; ++x) {
      cur[i] = x;
      for (size_t j = i + 1; j < vars.size(); ++j) cur[j] = 1;
      if (form.eval(cur) > target) break;
      rec(i + 1);
    }
    cur[i] = 1;
  };
  rec(0);
  return res;
}

BigInt pow_big(int64_t b, int e) { return big_pow(b, static_cast<uint64_t>(e)); }

}  // namespace

CountResult brute_force_count(const FormSpec& form, int64_t n, bool want_witnesses) {
  switch (form.combiner) {
    case Combiner::Sum: return count_sum(form, n, want_witnesses);
    case Combiner::ProductPair: return count_product(form, n, want_witnesses);
    case Combiner::SumThenProductPair: return count_positive_mixed(form, n, want_witnesses);
  }
  throw UnboundedEnumeration("unknown combiner");
}

std::vector<int64_t> integer_roots(const IntPoly& p0) {
  IntPoly p = p0;
  if (p.degree() < 0) throw InvalidArgument("integer_roots of the zero polynomial");
  std::vector<int64_t> roots;
  size_t shift = 0;
  while (shift < p.coeffs.size() && p.coeffs[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + static_cast<long>(shift));
  }
  if (p.degree() >= 1) {
    int64_t c0 = p.coeffs[0] < 0 ? -p.coeffs[0] : p.coeffs[0];
    for (int64_t d : divisors(c0))
      for (int64_t x : {d, -d})
        if (eval_big(p, x) == 0) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int64_t preimage_count(const IntPoly& p, Domain domain, int64_t m) {
  IntPoly q = p;
  if (q.coeffs.empty()) q.coeffs.push_back(0);
  q.coeffs[0] -= m;
  if (q.degree() < 0) throw InvalidArgument("polynomial is constantly equal to the target");
  int64_t c = 0;
  for (int64_t x : integer_roots(q))
    if (in_domain(domain, x)) ++c;
  return c;
}

int64_t r2_jacobi(int64_t n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  int64_t s = 0;
  for (int64_t d : divisors(n))
    if (d % 2 == 1) s += ((d - 1) / 2) % 2 == 0 ? 1 : -1;
  return 4 * s;
}

int64_t r_AB_direct(int64_t A, int64_t B, int64_t n) {
  if (n < 0) return 0;
  int64_t c = 0;
  int64_t bx = isqrt(n / A);
  for (int64_t x = -bx; x <= bx; ++x) {
    int64_t rest = n - A * x * x;
    if (rest < 0 || rest % B != 0) continue;
    rest /= B;
    if (rest == 0)
      c += 1;
    else if (is_square(rest))
      c += 2;
  }
  return c;
}

namespace {

Series r2_base_series(int64_t prec) {
  std::vector<Rational> c(prec);
  for (int64_t k = 0; k < prec; ++k) c[k] = r2_jacobi(k);
  return Series(0, std::move(c), true);
}

void require_gcd_one(const std::vector<int64_t>& A) {
  int64_t g = 0;
  for (int64_t a : A) {
    if (a < 1) throw InvalidArgument("coefficients must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw GcdNotOne("gcd of the coefficients is " + std::to_string(g));
}

int64_t series_int(const Series& s, int64_t e) {
  Rational v = s.coeff(e);
  if (!is_integer(v)) throw CrossCheckFailed("non-integral count " + to_string(v));
  return to_int64(v.get_num());
}

}  // namespace

int64_t r2_multi(const std::vector<int64_t>& A, int64_t n) {
  require_gcd_one(A);
  if (n < 0) return 0;
  const int64_t prec = n + 1;
  Series base = r2_base_series(prec);
  Series theta3 = theta_series(1, 0, false, prec);
  Series conv = Series::one(prec), direct = Series::one(prec);
  for (int64_t a : A) {
    conv = mul(conv, inflate(base, a).truncate(prec));
    direct = mul(direct, inflate(theta3, a).truncate(prec));
  }
  int64_t value = series_int(sqrt_T(conv), n);
  int64_t check = series_int(direct, n);
  if (value != check)
    throw CrossCheckFailed("T transform gives " + std::to_string(value) + " but the theta product gives " + std::to_string(check));
  return value;
}

int64_t r_quadratic_T(int64_t A, int64_t B, int64_t n) { return r2_multi({A, B}, n); }

int64_t shift_count(int64_t A, int64_t B, int64_t C, int64_t D, int64_t E, int64_t n) {
  if (A < 1 || B < 1) throw InvalidArgument("A and B must be positive");
  if (std::gcd(A, B) != 1) throw GcdNotOne("gcd(A, B) must be 1");
  if (C % (2 * A) != 0 || D % (2 * B) != 0) throw CongruenceViolated("need C = 0 mod 2A and D = 0 mod 2B");
  int64_t m = n + C * C / (4 * A) + D * D / (4 * B) - E;
  if (m < 0) return 0;
  return r_quadratic_T(A, B, m);
}

int64_t app2_count(const IntPoly& P, int64_t A, int64_t B, int64_t C, int64_t D, int64_t E, int64_t n) {
  IntPoly q = P;
  if (q.coeffs.empty()) q.coeffs.push_back(0);
  q.coeffs[0] -= n;
  if (q.degree() < 0) throw InvalidArgument("P is constantly equal to n");
  if (q.degree() == 0) return 0;
  int64_t total = 0;
  for (int64_t t : integer_roots(q)) total += shift_count(A, B, C, D, E, t);
  return total;
}

int64_t r_plus3(int64_t n) {
  if (n < 1) throw InvalidArgument("r_plus3 needs n >= 1");
  int64_t c = 0;
  for (int64_t d : divisors(n)) {
    if (static_cast<__int128>(d) * d * d == static_cast<__int128>(4) * n) {
      ++c;
      continue;
    }
    int64_t t = 4 * (n / d) - d * d;
    if (t <= 0 || t % 3 != 0) continue;
    auto k = exact_root(t / 3, 2);
    if (!k || *k == 0) continue;
    if (d - *k >= 2 && (d - *k) % 2 == 0) c += 2;
  }
  return c;
}

int64_t r3_signed(int64_t n) {
  if (n < 1) throw InvalidArgument("r3_signed needs n >= 1");
  int64_t c = 0;
  for (int64_t d : divisors(n)) {
    if (static_cast<__int128>(d) * d * d == static_cast<__int128>(4) * n) {
      ++c;
      continue;
    }
    int64_t t = 4 * (n / d) - d * d;
    if (t <= 0 || t % 3 != 0) continue;
    auto k = exact_root(t / 3, 2);
    if (!k) continue;
    if ((d - *k) % 2 == 0) c += 2;
  }
  return c;
}

int64_t r5(int64_t n) {
  if (n < 0) throw InvalidArgument("r5 needs n >= 0");
  if (n == 0) return 1;
  int64_t c = 0;
  for (int64_t d : divisors(n)) {
    BigInt bd = int_from(d);
    if (pow_big(d, 5) == 16 * int_from(n)) {
      ++c;
      continue;
    }
    BigInt w2 = 5 * pow_big(d, 4) + 20 * int_from(n / d);
    auto w = exact_sqrt(w2);
    if (!w) continue;
    BigInt z2 = -25 * bd * bd + 10 * *w;
    auto z = exact_sqrt(z2);
    if (!z) continue;
    BigInt num = 5 * bd - *z;
    if (num < 0 || num % 10 != 0) continue;
    c += 2;
  }
  return c;
}

Series s_cubic_AB_series(int64_t A, int64_t B, int64_t prec) {
  if (A < 1 || B < 1) throw InvalidArgument("A and B must be positive");
  if (std::gcd(A, B) != 1) throw GcdNotOne("gcd(A, B) must be 1");
  const int64_t lead = A + B;
  if (prec <= lead) return Series::zero(prec);
  // f(q^A)^2 f(q^B)^2 starts at q^{2(A+B)}; normalize, take T, shift back.
  const int64_t span = prec - lead;
  const int64_t full = 2 * lead + span;
  std::vector<Rational> r(full);
  for (int64_t k = 1; k < full; ++k) r[k] = r_plus3(k);
  Series R(0, r, true);
  Series conv = mul(inflate(R, A).truncate(full), inflate(R, B).truncate(full));
  Series normalized = shift(conv, -2 * lead).truncate(span);
  return shift(sqrt_T(normalized), lead);
}

int64_t s_cubic_AB(int64_t A, int64_t B, int64_t n) {
  if (n < 1) {
    s_cubic_AB_series(A, B, 1);
    return 0;
  }
  return series_int(s_cubic_AB_series(A, B, n + 1), n);
}

std::vector<std::pair<int64_t, int64_t>> starred_divisors(int64_t n) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t d : divisors(n)) {
    int64_t t = 4 * (n / d) - d * d;
    if (t <= 0 || t % 3 != 0) continue;
    auto k = exact_root(t / 3, 2);
    if (!k || *k == 0) continue;
    if (d - *k >= 2 && (d - *k) % 2 == 0) out.emplace_back(d, *k);
  }
  return out;
}

namespace {

std::vector<int64_t> s_divisors(int64_t n) {
  std::vector<int64_t> out;
  if (n < 1) return out;
  for (int64_t d : divisors(n))
    if (static_cast<__int128>(d) * d * d == static_cast<__int128>(4) * n) out.push_back(d);
  return out;
}

}  // namespace

BigInt s_nu_fn(int64_t n, int nu) {
  if (nu < 0) throw InvalidArgument("s_nu needs nu >= 0");
  BigInt s = 0;
  for (int64_t d : s_divisors(n)) s += pow_big(d, nu);
  return s;
}

Rational s_f(int64_t n, const ArithSeq& f) {
  Rational s = 0;
  for (int64_t d : s_divisors(n)) s += f(d);
  return s;
}

Rational sigma_star(int64_t n, int64_t nu) {
  Rational s = 0;
  for (auto [d, k] : starred_divisors(n)) s += rational_pow(Rational(int_from(d)), nu);
  return s;
}

int64_t d3_fn(int64_t n) { return static_cast<int64_t>(starred_divisors(n).size()); }

namespace {

int64_t h_count(int64_t k, int64_t u, int64_t v, bool coprime) {
  int64_t c = 0;
  for (int64_t a = std::max<int64_t>(1, u - k); a <= std::min(k, u - 1); ++a) {
    int64_t b = u - a;
    if (a * a - a * b + b * b != v) continue;
    if (coprime && std::gcd(a, b) != 1) continue;
    ++c;
  }
  return c;
}

}  // namespace

int64_t h_kuv(int64_t k, int64_t u, int64_t v) { return h_count(k, u, v, false); }
int64_t h_star(int64_t k, int64_t u, int64_t v) { return h_count(k, u, v, true); }

int64_t poly_rep_R(const IntPoly& P, int64_t n, bool signed_divisors) {
  if (P.degree() < 1 || P.leading() <= 0) throw HypothesisViolated("P must be nonconstant with positive leading coefficient");
  if (P.coeffs[0] != 0) throw HypothesisViolated("P(0) must be 0");
  if (signed_divisors && P.degree() % 2 != 0) throw HypothesisViolated("signed form needs even degree");
  if (n < 1) throw InvalidArgument("poly_rep_R needs n >= 1");
  int64_t c = 0;
  for (int64_t d : divisors(n)) {
    if (eval_big(P, d) == n) ++c;
    if (signed_divisors && eval_big(P, -d) == n) ++c;
  }
  int64_t direct = preimage_count(P, signed_divisors ? Domain::Z : Domain::N1, n);
  if (direct != c) throw CrossCheckFailed("divisor sum " + std::to_string(c) + " != direct count " + std::to_string(direct));
  return c;
}

ArithSeq rep_seq(const IntPoly& P, bool signed_divisors) {
  std::string id = std::string(signed_divisors ? "rep_signed:" : "rep:") + P.str();
  return ArithSeq(id, [P, signed_divisors](int64_t n) {
    if (n >= 1) return Rational(poly_rep_R(P, n, signed_divisors));
    return Rational(preimage_count(P, signed_divisors ? Domain::Z : Domain::N1, n));
  });
}

Rational conv_sum_count(const ArithSeq& R1, const ArithSeq& R2, int64_t n, const Rational& r1_0, const Rational& r2_0) {
  Rational s = 0;
  for (int64_t l = 0; l <= n; ++l) {
    Rational a = l == 0 ? r1_0 : R1(l);
    if (a == 0) continue;
    Rational b = l == n ? r2_0 : R2(n - l);
    s += a * b;
  }
  return s;
}

Rational conv_prod_count(const ArithSeq& R1, const ArithSeq& R2, int64_t n, int64_t c1, int64_t c2) {
  if (n < 1) throw InvalidArgument("conv_prod_count needs n >= 1");
  Rational s = 0;
  for (int64_t d : divisors(n)) s += R1(d - c1) * R2(n / d - c2);
  return s;
}

int64_t general_f2_count(const BiPoly& f, int64_t n) {
  if (f.terms.empty()) throw HypothesisViolated("f must be nonzero");
  for (const auto& [ij, c] : f.terms)
    if (ij.first == 0 || ij.second == 0) throw HypothesisViolated("f(x,0) and f(0,y) must vanish identically");
  if (n < 1) throw InvalidArgument("general_f2_count needs n >= 1");
  auto ds = divisors(n);
  int64_t c = 0;
  for (int64_t d : ds)
    for (int64_t e : ds)
      if (f.eval(d, e) == n) ++c;
  return c;
}

int64_t xnu_xy_count(int64_t n, int nu) {
  if (n < 1 || nu < 1) throw InvalidArgument("xnu_xy_count needs n >= 1 and nu >= 1");
  int64_t c = 0;
  for (int64_t d : divisors(n))
    if (static_cast<__int128>(n / d) - ipow_sat(d, nu - 1) >= 1) ++c;
  return c;
}

Rational theorem57_count(int64_t l, int nu, const ArithSeq& chi) {
  if (l < 1 || nu < 2) throw InvalidArgument("theorem57_count needs l >= 1 and nu >= 2");
  std::vector<Rational> a(l + 1), astar(l + 1);
  for (int64_t d = 1; d <= l; ++d) {
    NuSplit sp = nu_split(d, nu);
    int m = moebius(sp.n2);
    if (m != 0) a[d] = chi(sp.n1) * m;
  }
  for (int64_t d = 1; d <= l; ++d)
    if (a[d] != 0)
      for (int64_t t = d; t <= l; t += d) astar[t] += a[d];
  Rational s = 0;
  for (int64_t t = 1; t < l; ++t)
    if (astar[t] != 0 && astar[l - t] != 0) s += astar[t] * astar[l - t];
  return s;
}

}  // namespace qforms
