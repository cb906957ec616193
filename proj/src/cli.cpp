#include "qforms/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <map>
#include <sstream>

#include "qforms/arith.hpp"
#include "qforms/errors.hpp"
#include "qforms/identities.hpp"
#include "qforms/repcount.hpp"
#include "qforms/residues.hpp"
#include "qforms/series.hpp"

namespace qforms {
namespace {

using json = nlohmann::ordered_json;

json rational_json(const Rational& r) {
  return json{{"num", to_string(BigInt(r.get_num()))}, {"den", to_string(BigInt(r.get_den()))}};
}

std::string join(const std::vector<int64_t>& v, const std::string& sep = ",") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

struct SeriesOpts {
  std::string name;
  int64_t order = 48;
  int nu = 2;
  std::string chi = "one";
  std::string exponent = "const:-1";
  std::string poly = "x^2";
  std::string domain = "Z";
  std::string a = "1", b = "0";
  bool alternating = false;
  bool json = false;
};

const char* kSeriesHelp =
    "Named series (coefficients of q^e for e < order):\n"
    "  theta2     sum_{n in Z} q^{n^2+n}\n"
    "  theta3     sum_{n in Z} q^{n^2}\n"
    "  theta4     sum_{n in Z} (-1)^n q^{n^2}\n"
    "  phi_nu     sum_{n>=1} q^{n^nu}            (--nu)\n"
    "  partition  prod (1-q^n)^{-1}\n"
    "  euler      prod (1-q^n)\n"
    "  product    prod (1-q^n)^{e(n)}            (--exponent <seq id>)\n"
    "  lambert    sum chi(n) q^n/(1-q^n)         (--chi)\n"
    "  poly       sum chi(n) q^{P(n)}            (--poly, --chi, --domain N1|N0|Z)\n"
    "  theta      sum (+-1)^n q^{a n^2 + b n}    (--a, --b, --alternating)\n";

Series build_series(const SeriesOpts& o) {
  int64_t N = o.order;
  if (N < 1) throw InvalidArgument("order must be positive");
  if (o.name == "theta2") return theta_series(1, 1, false, N);
  if (o.name == "theta3") return theta_series(1, 0, false, N);
  if (o.name == "theta4") return theta_series(1, 0, true, N);
  if (o.name == "phi_nu") {
    if (o.nu < 1) throw InvalidArgument("nu must be positive");
    IntPoly p;
    p.coeffs.assign(o.nu + 1, 0);
    p.coeffs[o.nu] = 1;
    return poly_theta(p, chi_from_id("one"), Domain::N1, N);
  }
  if (o.name == "partition") return product_expand(chi_from_id("const:-1"), N);
  if (o.name == "euler") return product_expand(chi_from_id("one"), N);
  if (o.name == "product") return product_expand(chi_from_id(o.exponent), N);
  if (o.name == "lambert") return lambert(chi_from_id(o.chi), N);
  if (o.name == "poly") {
    FormSpec f = parse_form(o.poly);
    if (f.parts.size() != 1 || f.product) throw ParseError("--poly takes a polynomial in one variable");
    IntPoly p = f.parts[0].poly;
    if (p.coeffs.empty()) p.coeffs.push_back(0);
    p.coeffs[0] += f.constant;
    return poly_theta(p, chi_from_id(o.chi), parse_domain(o.domain), N);
  }
  if (o.name == "theta") return theta_series(parse_rational(o.a), parse_rational(o.b), o.alternating, N);
  throw InvalidArgument("unknown series '" + o.name + "'");
}

int cmd_coeffs(const SeriesOpts& o, std::ostream& out) {
  Series s = build_series(o);
  if (!o.json) {
    out << s.str() << "\n";
    return 0;
  }
  json terms = json::array();
  for (size_t i = 0; i < s.coeffs().size(); ++i) {
    if (s.coeffs()[i] == 0) continue;
    terms.push_back(json{{"exp", s.offset() + static_cast<int64_t>(i)}, {"value", rational_json(s.coeffs()[i])}});
  }
  out << json{{"series", o.name}, {"order", o.order}, {"offset", s.offset()}, {"terms", terms}}.dump(2) << "\n";
  return 0;
}

struct TableOpts {
  std::string fn;
  int nu = 2;
  int64_t from = 1, to = 20;
  std::string chi = "one";
  bool json = false;
};

using TableFn = std::function<Rational(int64_t n, int nu, const ArithSeq& chi)>;

const std::map<std::string, TableFn>& table_fns() {
  static const std::map<std::string, TableFn> fns = {
      {"lambda_nu", [](int64_t n, int nu, const ArithSeq&) { return Rational(lambda_nu(n, nu)); }},
      {"X_nu", [](int64_t n, int nu, const ArithSeq&) { return Rational(X_nu(n, nu)); }},
      {"mu_nu", [](int64_t n, int nu, const ArithSeq&) { return Rational(mu_nu(n, nu)); }},
      {"mu_star_nu", [](int64_t n, int nu, const ArithSeq&) { return Rational(mu_star_nu(n, nu)); }},
      {"c_nu", [](int64_t n, int nu, const ArithSeq&) { return c_nu(n, nu); }},
      {"Y_nu", [](int64_t n, int nu, const ArithSeq& chi) { return Y_nu(n, nu, chi); }},
      {"A_nu", [](int64_t n, int nu, const ArithSeq& chi) { return A_nu(n, nu, chi); }},
      {"Y_nu_closed", [](int64_t n, int nu, const ArithSeq& chi) { return Y_nu_closed(n, nu, chi); }},
      {"A_nu_closed", [](int64_t n, int nu, const ArithSeq& chi) { return A_nu_closed(n, nu, chi); }},
      {"A_star_nu", [](int64_t n, int nu, const ArithSeq& chi) { return A_star_nu(n, nu, chi); }},
      {"sigma", [](int64_t n, int nu, const ArithSeq&) { return sigma_nu(n, nu); }},
      {"sigma_star", [](int64_t n, int nu, const ArithSeq&) { return sigma_star(n, nu); }},
      {"h", [](int64_t n, int nu, const ArithSeq&) { return h_a(n, nu); }},
      {"mu_k", [](int64_t n, int nu, const ArithSeq&) { return Rational(mu_k(n, nu)); }},
      {"moebius", [](int64_t n, int, const ArithSeq&) { return Rational(moebius(n)); }},
      {"liouville", [](int64_t n, int, const ArithSeq&) { return Rational(liouville(n)); }},
      {"totient", [](int64_t n, int, const ArithSeq&) { return Rational(int_from(totient(n))); }},
      {"chi", [](int64_t n, int, const ArithSeq& chi) { return chi(n); }},
      {"r2", [](int64_t n, int, const ArithSeq&) { return Rational(int_from(r2_jacobi(n))); }},
      {"r3_signed", [](int64_t n, int, const ArithSeq&) { return Rational(int_from(r3_signed(n))); }},
      {"r_plus3", [](int64_t n, int, const ArithSeq&) { return Rational(int_from(r_plus3(n))); }},
      {"r5", [](int64_t n, int, const ArithSeq&) { return Rational(int_from(r5(n))); }},
      {"d3", [](int64_t n, int, const ArithSeq&) { return Rational(int_from(d3_fn(n))); }},
      {"s_nu", [](int64_t n, int nu, const ArithSeq&) { return Rational(s_nu_fn(n, nu)); }},
  };
  return fns;
}

std::string table_help() {
  std::string s = "Table functions (--nu is the exponent, k or a where relevant):\n ";
  for (const auto& [name, fn] : table_fns()) s += " " + name;
  s += "\nSequence ids for --chi and --exponent:\n";
  for (const auto& line : chi_registry_help()) s += "  " + line + "\n";
  return s;
}

int cmd_table(const TableOpts& o, std::ostream& out) {
  auto it = table_fns().find(o.fn);
  if (it == table_fns().end()) throw InvalidArgument("unknown table function '" + o.fn + "'");
  if (o.to < o.from) throw InvalidArgument("--to must be at least --from");
  ArithSeq chi = chi_from_id(o.chi);
  json rows = json::array();
  for (int64_t n = o.from; n <= o.to; ++n) {
    Rational v = it->second(n, o.nu, chi);
    if (o.json)
      rows.push_back(json{{"n", n}, {"value", rational_json(v)}});
    else
      out << n << " " << to_string(v) << "\n";
  }
  if (o.json) out << rows.dump(2) << "\n";
  return 0;
}

struct RepOpts {
  std::string form;
  int64_t n = 0;
  std::string domain;
  bool witnesses = false;
  bool json = false;
};

int cmd_rep(const RepOpts& o, std::ostream& out) {
  FormSpec f = parse_form(o.form, o.domain);
  CountResult r = brute_force_count(f, o.n, o.witnesses);
  std::vector<char> vars = f.variables();
  if (o.json) {
    json j{{"form", f.str()}, {"n", r.n}, {"count", r.count}};
    if (o.witnesses) {
      json w = json::array();
      for (const auto& t : r.witnesses) w.push_back(t);
      j["witnesses"] = w;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "count=" << r.count << "\n";
  for (const auto& t : r.witnesses) {
    for (size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << vars[i] << "=" << t[i];
    out << "\n";
  }
  return 0;
}

std::string status_of(const IdentityReport& r) {
  if (!r.ok()) return "FAIL";
  if (r.experimental) return "EXPERIMENTAL";
  if (r.expect_fail) return "XFAIL";
  return "PASS";
}

json report_json(const IdentityReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json j{{"id", r.id}, {"params", params}, {"order", r.order}, {"window", json::array({r.lo, r.hi})}, {"equal", r.equal}};
  if (r.first_diff)
    j["first_diff"] = json{{"exp", r.first_diff->exp}, {"lhs", rational_json(r.first_diff->lhs)}, {"rhs", rational_json(r.first_diff->rhs)}};
  else
    j["first_diff"] = nullptr;
  j["status"] = status_of(r);
  return j;
}

void report_text(const IdentityReport& r, std::ostream& out) {
  out << status_of(r) << " " << r.id;
  for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
  out << " window=[" << r.lo << "," << r.hi << "]";
  if (r.first_diff)
    out << " first_diff exp=" << r.first_diff->exp << " lhs=" << to_string(r.first_diff->lhs) << " rhs=" << to_string(r.first_diff->rhs);
  if (!r.note.empty()) out << " (" << r.note << ")";
  out << "\n";
}

ParamMap parse_params(const std::vector<std::string>& raw) {
  ParamMap m;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidArgument("--param expects key=value, got '" + kv + "'");
    m[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return m;
}

struct VerifyOpts {
  std::string id;
  std::vector<std::string> params;
  std::optional<int64_t> order;
  bool mutate = false;
  bool json = false;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.mutate) {
    MutationReport m = verify_with_mutation(o.id, parse_params(o.params), o.order);
    if (o.json) {
      json j = report_json(m.report);
      j["mutated_exp"] = m.mutated_exp;
      j["located"] = m.located;
      out << j.dump(2) << "\n";
    } else {
      report_text(m.report, out);
      out << "mutated exp=" << m.mutated_exp << " located=" << (m.located ? "true" : "false") << "\n";
    }
    return m.report.ok() ? 0 : 1;
  }
  IdentityReport r = verify(o.id, parse_params(o.params), o.order);
  if (o.json)
    out << report_json(r).dump(2) << "\n";
  else
    report_text(r, out);
  return r.ok() ? 0 : 1;
}

struct SuiteOpts {
  std::string filter;
  std::optional<int64_t> order;
  bool list = false;
  bool json = false;
};

int cmd_suite(const SuiteOpts& o, std::ostream& out) {
  if (o.list) {
    json arr = json::array();
    for (const auto& info : list_identities()) {
      if (info.id.rfind(o.filter, 0) != 0) continue;
      if (o.json)
        arr.push_back(json{{"id", info.id}, {"kind", kind_name(info.kind)}, {"default_order", info.default_order}, {"statement", info.statement}});
      else
        out << info.id << "  [" << kind_name(info.kind) << ", order " << info.default_order << "]  " << info.statement << "\n";
    }
    if (o.json) out << arr.dump(2) << "\n";
    return 0;
  }
  std::vector<IdentityReport> reports = run_suite(o.filter, o.order);
  if (reports.empty()) throw UnknownIdentity("no catalog entry matches '" + o.filter + "'");
  size_t passed = 0;
  for (const auto& r : reports) passed += r.ok();
  if (o.json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << json{{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) report_text(r, out);
    out << "passed " << passed << "/" << reports.size() << "\n";
  }
  return passed == reports.size() ? 0 : 1;
}

struct ResidueOpts {
  int64_t t = 0, a = 0, n = 0, b = 0, p = 0, q = 0;
  bool json = false;
};

int cmd_classify(const ResidueOpts& o, std::ostream& out) {
  ResidueClassification c = th78_classify(o.t);
  if (o.json) {
    out << json{{"t", c.t}, {"S1", c.S1}, {"S-1", c.Sm1}, {"S0", c.S0}, {"S11", c.S11}, {"S12", c.S12}}.dump(2) << "\n";
    return 0;
  }
  out << "t=" << c.t << "\n";
  out << "S1={" << join(c.S1) << "}\n";
  out << "S-1={" << join(c.Sm1) << "}\n";
  out << "S0={" << join(c.S0) << "}\n";
  out << "S11={" << join(c.S11) << "}\n";
  out << "S12={" << join(c.S12) << "}\n";
  return 0;
}

int cmd_res(const ResidueOpts& o, std::ostream& out) {
  int64_t count = res_count(o.a, o.n);
  int64_t rule = res_rule(o.n);
  if (o.json)
    out << json{{"a", o.a}, {"n", o.n}, {"count", count}, {"rule", rule}}.dump(2) << "\n";
  else
    out << "count=" << count << " rule=" << rule << "\n";
  return 0;
}

int cmd_th75(const ResidueOpts& o, std::ostream& out) {
  int64_t count = th75_count(o.p, o.q);
  if (o.p == o.q) {
    if (o.json)
      out << json{{"p", o.p}, {"q", o.q}, {"count", count}, {"rule", nullptr}}.dump(2) << "\n";
    else
      out << "count=" << count << "\n";
    return 0;
  }
  int64_t rule = th75_rule(o.p, o.q);
  if (o.json)
    out << json{{"p", o.p}, {"q", o.q}, {"count", count}, {"rule", rule}}.dump(2) << "\n";
  else
    out << "count=" << count << " rule=" << rule << "\n";
  return 0;
}

int cmd_check(const ResidueOpts& o, std::ostream& out) {
  ImpossibilityResult r = impossibility_check(o.a, o.b, o.n);
  if (o.json) {
    json j{{"a", o.a}, {"b", o.b}, {"n", o.n}, {"symbol", r.symbol}, {"counterexample", r.counterexample}};
    if (r.counterexample) j["witness"] = json::array({r.x, r.y});
    out << j.dump(2) << "\n";
  } else if (r.counterexample) {
    out << "counterexample x=" << r.x << " y=" << r.y << "\n";
  } else {
    out << "consistent symbol=" << r.symbol << "\n";
  }
  return r.counterexample ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series, representation counts and identity checks"};
  app.name("qforms");
  app.require_subcommand(1);

  SeriesOpts so;
  auto* coeffs = app.add_subcommand("coeffs", "Print the coefficients of a named series");
  coeffs->footer(kSeriesHelp);
  coeffs->add_option("--series", so.name, "Series name")->required();
  coeffs->add_option("--order", so.order, "Truncation order")->capture_default_str();
  coeffs->add_option("--nu", so.nu, "Exponent for phi_nu")->capture_default_str();
  coeffs->add_option("--chi", so.chi, "Sequence id for lambert and poly")->capture_default_str();
  coeffs->add_option("--exponent", so.exponent, "Sequence id e(n) for product")->capture_default_str();
  coeffs->add_option("--poly", so.poly, "Polynomial in x for poly")->capture_default_str();
  coeffs->add_option("--domain", so.domain, "N1, N0 or Z for poly")->capture_default_str();
  coeffs->add_option("--a", so.a, "Quadratic coefficient for theta")->capture_default_str();
  coeffs->add_option("--b", so.b, "Linear coefficient for theta")->capture_default_str();
  coeffs->add_flag("--alternating", so.alternating, "Sign (-1)^n for theta");
  coeffs->add_flag("--json", so.json, "JSON output");

  TableOpts to;
  auto* table = app.add_subcommand("table", "Tabulate an arithmetic function");
  table->footer(table_help());
  table->add_option("--fn", to.fn, "Function name")->required();
  table->add_option("--nu", to.nu, "Exponent nu")->capture_default_str();
  table->add_option("--from", to.from, "First n")->capture_default_str();
  table->add_option("--to", to.to, "Last n")->capture_default_str();
  table->add_option("--chi", to.chi, "Sequence id")->capture_default_str();
  table->add_flag("--json", to.json, "JSON output");

  RepOpts ro;
  auto* rep = app.add_subcommand("rep", "Count representations of n by a form");
  rep->footer(
      "Form grammar:\n"
      "  expr    := sumterm ('+' sumterm)* | sumterm '*' sumterm\n"
      "  sumterm := [int '*'] var '^' uint | int\n"
      "  var     := x | y | z | w\n"
      "Domains default to Z; override with e.g. --domain x=Z,y=N1 (N1, N0, Z).");
  rep->add_option("--form", ro.form, "Form expression")->required();
  rep->add_option("--n", ro.n, "Target integer")->required();
  rep->add_option("--domain", ro.domain, "Per-variable domains");
  rep->add_flag("--witnesses", ro.witnesses, "List the solutions");
  rep->add_flag("--json", ro.json, "JSON output");

  VerifyOpts vo;
  auto* ver = app.add_subcommand("verify", "Check one catalog identity");
  ver->add_option("--id", vo.id, "Catalog id")->required();
  ver->add_option("--param", vo.params, "Parameter override key=value (repeatable)");
  ver->add_option("--order", vo.order, "Truncation order (entry default when omitted)");
  ver->add_flag("--mutate", vo.mutate, "Perturb one right-hand coefficient mid-window before comparing");
  ver->add_flag("--json", vo.json, "JSON output");

  SuiteOpts su;
  auto* suite = app.add_subcommand("suite", "Check every catalog identity");
  suite->add_option("--filter", su.filter, "Id prefix");
  suite->add_option("--order", su.order, "Truncation order for every case (entry defaults when omitted)");
  suite->add_flag("--list", su.list, "List the catalog instead of checking it");
  suite->add_flag("--json", su.json, "JSON output");

  ResidueOpts rs;
  auto* residues = app.add_subcommand("residues", "Quadratic residue counts and classifications");
  residues->require_subcommand(1);
  auto* classify = residues->add_subcommand("classify", "Split 1..t by the symbol (-t|n)");
  classify->add_option("--t", rs.t, "Prime t = 3 mod 4")->required();
  classify->add_flag("--json", rs.json, "JSON output");
  auto* res = residues->add_subcommand("res", "Count square roots of a mod n");
  res->add_option("--a", rs.a, "Residue")->required();
  res->add_option("--n", rs.n, "Modulus")->required();
  res->add_flag("--json", rs.json, "JSON output");
  auto* th75 = residues->add_subcommand("th75", "Pairs (x, y), y != 0 mod q, with x^2 + p y^2 = 0 mod q");
  th75->add_option("--p", rs.p, "Prime p")->required();
  th75->add_option("--q", rs.q, "Prime q")->required();
  th75->add_flag("--json", rs.json, "JSON output");
  auto* check = residues->add_subcommand("check", "Search a x^2 + b y^2 = n when (-ab|n) = -1");
  check->add_option("--a", rs.a, "Coefficient a")->required();
  check->add_option("--b", rs.b, "Coefficient b")->required();
  check->add_option("--n", rs.n, "Target n")->required();
  check->add_flag("--json", rs.json, "JSON output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    CLI::App* sub = &app;
    while (true) {
      auto subs = sub->get_subcommands();
      if (subs.empty()) break;
      sub = subs.front();
    }
    out << sub->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    CLI::App* sub = &app;
    while (true) {
      auto subs = sub->get_subcommands();
      if (subs.empty()) break;
      sub = subs.front();
    }
    err << "error: " << e.what() << "\n\n" << sub->help();
    return 2;
  }

  try {
    if (*coeffs) return cmd_coeffs(so, out);
    if (*table) return cmd_table(to, out);
    if (*rep) return cmd_rep(ro, out);
    if (*ver) return cmd_verify(vo, out);
    if (*suite) return cmd_suite(su, out);
    if (*classify) return cmd_classify(rs, out);
    if (*res) return cmd_res(rs, out);
    if (*th75) return cmd_th75(rs, out);
    if (*check) return cmd_check(rs, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qforms
