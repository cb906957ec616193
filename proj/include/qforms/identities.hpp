#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qforms/rational.hpp"

namespace qforms {

enum class CheckKind { SeriesEq, SeqEq };
std::string kind_name(CheckKind k);

using ParamMap = std::map<std::string, std::string>;

struct FirstDiff {
  int64_t exp = 0;
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  std::string id;
  ParamMap params;
  int64_t order = 0;
  /// Inclusive comparison window.
  int64_t lo = 0;
  int64_t hi = 0;
  bool equal = true;
  std::optional<FirstDiff> first_diff;
  bool experimental = false;
  bool expect_fail = false;
  std::vector<std::pair<std::string, std::string>> extra;
  std::string note;

  /// Experimental entries never fail; expect_fail entries pass when unequal.
  bool ok() const;
};

struct IdentityCase {
  ParamMap params;
  std::optional<int64_t> order;
};

struct IdentityInfo {
  std::string id;
  std::string statement;
  CheckKind kind = CheckKind::SeriesEq;
  int64_t default_order = 48;
  ParamMap defaults;
  std::vector<IdentityCase> cases;
  bool experimental = false;
  bool expect_fail = false;
};

/// Sorted by id.
std::vector<IdentityInfo> list_identities();

IdentityReport verify(const std::string& id, const ParamMap& params = {}, std::optional<int64_t> order = std::nullopt);

/// Every registered case whose id starts with filter, in (id, case) order.
/// An explicit order overrides each case's own.
std::vector<IdentityReport> run_suite(const std::string& filter = "", std::optional<int64_t> order = std::nullopt,
                                      unsigned threads = 0);

struct MutationReport {
  IdentityReport report;
  int64_t mutated_exp = 0;
  /// The mutated comparison failed exactly at the perturbed exponent.
  bool located = false;
};

/// Adds 1 to the right-hand coefficient in the middle of the window and reruns the comparison.
MutationReport verify_with_mutation(const std::string& id, const ParamMap& params = {},
                                    std::optional<int64_t> order = std::nullopt);

}  // namespace qforms
