#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "qforms/errors.hpp"
#include "qforms/repcount.hpp"

namespace qforms {

namespace {

struct Monomial {
  int64_t coeff = 1;
  std::map<char, int> powers;
};

class MonomialParser {
 public:
  MonomialParser(const std::string& text, const std::string& vars) : vars_(vars) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    if (s_.empty()) throw ParseError("empty form");
  }

  std::vector<Monomial> parse() {
    std::vector<Monomial> out;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    out.push_back(term(sign));
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      out.push_back(term(c == '-' ? -1 : 1));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  int64_t number() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 15) fail("number too large");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  void factor(Monomial& m) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      m.coeff *= number();
      return;
    }
    if (vars_.find(c) == std::string::npos || c == '\0') fail("expected a number or one of the variables " + vars_);
    ++pos_;
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      int64_t v = number();
      if (v < 1 || v > 64) fail("exponent must be between 1 and 64");
      e = static_cast<int>(v);
    }
    m.powers[c] += e;
  }

  Monomial term(int sign) {
    Monomial m;
    m.coeff = sign;
    factor(m);
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        factor(m);
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        factor(m);
      } else {
        break;
      }
    }
    return m;
  }

  std::string s_;
  std::string vars_;
  size_t pos_ = 0;
};

std::map<char, Domain> parse_domains(const std::string& text) {
  std::map<char, Domain> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    auto eq = item.find('=');
    if (eq != 1 || std::string("xyzw").find(item[0]) == std::string::npos)
      throw ParseError("bad domain assignment '" + item + "' (expected e.g. x=N1)");
    out[item[0]] = parse_domain(item.substr(2));
  }
  return out;
}

}  // namespace

std::string combiner_name(Combiner c) {
  switch (c) {
    case Combiner::Sum: return "Sum";
    case Combiner::ProductPair: return "ProductPair";
    case Combiner::SumThenProductPair: return "SumThenProductPair";
  }
  return "?";
}

std::vector<char> FormSpec::variables() const {
  std::set<char> v;
  for (const auto& p : parts) v.insert(p.var);
  if (product) {
    v.insert(product->var1);
    v.insert(product->var2);
  }
  return {v.begin(), v.end()};
}

Domain FormSpec::domain_of(char var) const {
  for (const auto& p : parts)
    if (p.var == var) return p.domain;
  return Domain::Z;
}

__int128 FormSpec::eval(const std::vector<int64_t>& values) const {
  auto vars = variables();
  auto value_of = [&](char v) {
    auto it = std::find(vars.begin(), vars.end(), v);
    return values.at(static_cast<size_t>(it - vars.begin()));
  };
  __int128 total = constant;
  for (const auto& p : parts) total += p.poly.eval(value_of(p.var));
  if (product) {
    IntPoly a{std::vector<int64_t>(product->exp1 + 1, 0)};
    a.coeffs.back() = 1;
    IntPoly b{std::vector<int64_t>(product->exp2 + 1, 0)};
    b.coeffs.back() = 1;
    total += static_cast<__int128>(product->coeff) * a.eval(value_of(product->var1)) * b.eval(value_of(product->var2));
  }
  return total;
}

std::string FormSpec::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& t) {
    if (t.empty()) return;
    if (first) {
      os << t;
    } else if (t[0] == '-') {
      os << " - " << t.substr(1);
    } else {
      os << " + " << t;
    }
    first = false;
  };
  for (const auto& p : parts) emit(p.poly.str(p.var));
  if (product) {
    std::ostringstream t;
    int64_t c = product->coeff;
    if (c == -1)
      t << "-";
    else if (c != 1)
      t << c << "*";
    t << product->var1;
    if (product->exp1 > 1) t << "^" << product->exp1;
    t << "*" << product->var2;
    if (product->exp2 > 1) t << "^" << product->exp2;
    emit(t.str());
  }
  if (constant != 0) emit(std::to_string(constant));
  if (first) os << "0";
  return os.str();
}

FormSpec parse_form(const std::string& text, const std::string& domains) {
  auto monomials = MonomialParser(text, "xyzw").parse();
  FormSpec spec;
  std::map<char, IntPoly> polys;
  for (const auto& m : monomials) {
    if (m.coeff == 0) continue;
    if (m.powers.empty()) {
      spec.constant += m.coeff;
    } else if (m.powers.size() == 1) {
      auto [var, e] = *m.powers.begin();
      IntPoly& p = polys[var];
      if (static_cast<int>(p.coeffs.size()) <= e) p.coeffs.resize(e + 1, 0);
      p.coeffs[e] += m.coeff;
    } else if (m.powers.size() == 2) {
      if (spec.product) throw ParseError("at most one product term is supported in '" + text + "'");
      auto it = m.powers.begin();
      ProductTerm pt;
      pt.coeff = m.coeff;
      pt.var1 = it->first;
      pt.exp1 = it->second;
      ++it;
      pt.var2 = it->first;
      pt.exp2 = it->second;
      spec.product = pt;
    } else {
      throw ParseError("product terms may involve at most two variables in '" + text + "'");
    }
  }
  auto doms = parse_domains(domains);
  for (auto& [var, p] : polys) {
    if (p.degree() < 1) continue;
    spec.parts.push_back(FormPart{var, p, doms.count(var) ? doms[var] : Domain::Z});
  }
  if (spec.product) {
    for (char v : {spec.product->var1, spec.product->var2}) {
      bool present = std::any_of(spec.parts.begin(), spec.parts.end(), [&](const FormPart& p) { return p.var == v; });
      if (!present) spec.parts.push_back(FormPart{v, IntPoly{{0}}, doms.count(v) ? doms[v] : Domain::Z});
    }
    std::sort(spec.parts.begin(), spec.parts.end(), [](const FormPart& a, const FormPart& b) { return a.var < b.var; });
    bool has_sum = std::any_of(spec.parts.begin(), spec.parts.end(), [](const FormPart& p) { return p.poly.degree() >= 1; });
    spec.combiner = (has_sum || spec.constant != 0) ? Combiner::SumThenProductPair : Combiner::ProductPair;
  } else {
    spec.combiner = Combiner::Sum;
    if (spec.parts.empty()) throw ParseError("form has no variables: '" + text + "'");
  }
  for (const auto& [var, d] : doms) {
    auto vars = spec.variables();
    if (std::find(vars.begin(), vars.end(), var) == vars.end())
      throw ParseError(std::string("domain given for unused variable ") + var);
  }
  return spec;
}

__int128 BiPoly::eval(int64_t x, int64_t y) const {
  __int128 total = 0;
  for (const auto& [ij, c] : terms) {
    __int128 t = c;
    for (int i = 0; i < ij.first; ++i) t *= x;
    for (int j = 0; j < ij.second; ++j) t *= y;
    total += t;
  }
  return total;
}

BiPoly parse_bipoly(const std::string& text) {
  BiPoly f;
  for (const auto& m : MonomialParser(text, "xy").parse()) {
    int i = m.powers.count('x') ? m.powers.at('x') : 0;
    int j = m.powers.count('y') ? m.powers.at('y') : 0;
    f.terms[{i, j}] += m.coeff;
    if (f.terms[{i, j}] == 0) f.terms.erase({i, j});
  }
  return f;
}

}  // namespace qforms
