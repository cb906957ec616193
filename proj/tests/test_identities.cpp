#include <doctest.h>

#include <set>

#include "qforms/errors.hpp"
#include "qforms/identities.hpp"

using namespace qforms;

TEST_CASE("registry is sorted and unique") {
  std::vector<IdentityInfo> all = list_identities();
  REQUIRE(all.size() > 40);
  std::set<std::string> ids;
  for (size_t i = 0; i < all.size(); ++i) {
    ids.insert(all[i].id);
    if (i) CHECK(all[i - 1].id < all[i].id);
    CHECK_FALSE(all[i].statement.empty());
  }
  CHECK(ids.size() == all.size());
}

TEST_CASE("full suite passes at default orders") {
  std::vector<IdentityReport> reports = run_suite();
  REQUIRE(reports.size() > 100);
  for (const IdentityReport& r : reports) {
    INFO(r.id << " window [" << r.lo << ", " << r.hi << "]" << (r.first_diff ? " diff at " + std::to_string(r.first_diff->exp) : ""));
    CHECK(r.ok());
    if (!r.experimental && !r.expect_fail) CHECK(r.equal);
  }
}

TEST_CASE("named checks") {
  IdentityReport j = verify("jacobi2sq");
  CHECK(j.equal);
  CHECK(j.hi == 199);
  IdentityReport t47 = verify("th47", {{"nu", "3"}});
  CHECK(t47.equal);
  CHECK(t47.hi == 63);
  IdentityReport bad = verify("th47_corrupted", {{"nu", "3"}});
  CHECK_FALSE(bad.equal);
  REQUIRE(bad.first_diff);
  CHECK(bad.first_diff->exp == 8);
  CHECK(bad.ok());
  CHECK(verify("th10", {{"nu", "1"}}, 2001).equal);
  CHECK(verify("th11", {{"nu", "2"}}, 501).equal);
  CHECK(verify("th11", {{"nu", "-1"}}, 501).equal);
  CHECK(verify("th12").equal);
  for (const char* G : {"5", "13"}) CHECK(verify("th67", {{"G", G}}, 200).equal);
  IdentityReport e = verify("eq166_printed");
  CHECK(e.equal);
  CHECK(e.hi >= 841);
}

TEST_CASE("parameter and id errors") {
  CHECK_THROWS_AS(verify("no_such_identity"), UnknownIdentity);
  CHECK_THROWS_AS(verify("th10", {{"nu", "5"}}), BadParams);
  CHECK_THROWS_AS(verify("th47", {{"bogus", "1"}}), BadParams);
}

TEST_CASE("suite filtering") {
  CHECK(run_suite("zzz_nothing").empty());
  std::vector<IdentityReport> sub = run_suite("th6");
  REQUIRE_FALSE(sub.empty());
  for (const IdentityReport& r : sub) CHECK(r.id.rfind("th6", 0) == 0);
}

TEST_CASE("property: every mutation is located") {
  for (const IdentityInfo& info : list_identities()) {
    if (info.experimental || info.expect_fail) continue;
    MutationReport m = verify_with_mutation(info.id, info.cases.empty() ? ParamMap{} : info.cases.front().params,
                                            std::min<int64_t>(info.default_order, 120));
    INFO(info.id << " mutated at " << m.mutated_exp);
    CHECK(m.located);
    CHECK_FALSE(m.report.equal);
  }
}

TEST_CASE("property: results are deterministic across thread counts") {
  std::vector<IdentityReport> a = run_suite("th", 60, 1), b = run_suite("th", 60, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].equal == b[i].equal);
    CHECK(a[i].lo == b[i].lo);
    CHECK(a[i].hi == b[i].hi);
  }
}
