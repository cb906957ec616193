#pragma once

#include <deque>
#include <functional>
#include <set>

#include "qforms/arith.hpp"
#include "qforms/arith_seq.hpp"
#include "qforms/identities.hpp"
#include "qforms/repcount.hpp"
#include "qforms/series.hpp"

namespace qforms::detail {

class Params {
 public:
  Params(const ParamMap& defaults, const ParamMap& given);

  int64_t integer(const std::string& key) const;
  Rational rational(const std::string& key) const;
  ArithSeq chi(const std::string& key) const;
  const std::string& str(const std::string& key) const;
  IntPoly poly(const std::string& key) const;
  BiPoly bipoly(const std::string& key) const;
  const ParamMap& values() const { return values_; }

 private:
  ParamMap values_;
};

struct Sides {
  Series lhs;
  Series rhs;
  std::vector<std::pair<std::string, std::string>> extra = {};
  std::string note = {};
};

using Builder = std::function<Sides(const Params&, int64_t order)>;

struct Entry {
  IdentityInfo info;
  Builder build;
};

class Registry {
 public:
  Entry& add(std::string id, std::string statement, int64_t default_order, Builder build);
  const std::deque<Entry>& entries() const { return entries_; }

 private:
  std::deque<Entry> entries_;
};

void register_core(Registry& r);
void register_cubic(Registry& r);
void register_products(Registry& r);
void register_theta(Registry& r);

IntPoly parse_intpoly(const std::string& text);

/// Coefficients fn(n) for lo <= n < prec.
Series seq_series(const std::function<Rational(int64_t)>& fn, int64_t lo, int64_t prec);
/// sum over n >= start of coef(n) q^{e(n)} for e(n) < prec, e increasing in n.
Series power_sum(const std::function<Rational(int64_t)>& coef, const std::function<int64_t(int64_t)>& e, int64_t start,
                 int64_t prec);
/// sum over n >= 1 of f(n) q^{n^k}.
Series power_series(const ArithSeq& f, int k, int64_t prec);

Rational R(int64_t v);
/// f_i: positive integers x with f(x) = d, ascending.
std::vector<int64_t> preimages_pos(const IntPoly& f, int64_t d);

}  // namespace qforms::detail
