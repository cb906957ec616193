#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qforms/rational.hpp"

namespace qforms {

/// A named arithmetic function n -> Rational on all integers, with a
/// thread-safe append-only memo.
class ArithSeq {
 public:
  using Fn = std::function<Rational(int64_t)>;

  ArithSeq(std::string id, Fn fn);

  Rational operator()(int64_t n) const;
  const std::string& id() const { return id_; }

 private:
  struct Memo;
  std::string id_;
  Fn fn_;
  std::shared_ptr<Memo> memo_;
};

ArithSeq constant_seq(const Rational& c);

/// Builds a character/sequence from its registry id, e.g. "one", "mu",
/// "liouville", "jacobi:5", "res:1:4", "signed_res:3:8", "lambda_nu:3".
ArithSeq chi_from_id(const std::string& id);
std::vector<std::string> chi_registry_help();

}  // namespace qforms
