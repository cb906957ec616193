#pragma once

#include <stdexcept>
#include <string>

namespace qforms {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define QFORMS_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

QFORMS_DEFINE_ERROR(OutOfWindow)
QFORMS_DEFINE_ERROR(EmptyWindow)
QFORMS_DEFINE_ERROR(NonzeroConstantTerm)
QFORMS_DEFINE_ERROR(ConstantTermNotOne)
QFORMS_DEFINE_ERROR(BadConstantTerm)
QFORMS_DEFINE_ERROR(NonpositiveExponentPresent)
QFORMS_DEFINE_ERROR(NonIntegralExponent)
QFORMS_DEFINE_ERROR(NonpositiveA)
QFORMS_DEFINE_ERROR(UnboundedBelow)
QFORMS_DEFINE_ERROR(EvenModulus)
QFORMS_DEFINE_ERROR(UnboundedEnumeration)
QFORMS_DEFINE_ERROR(GcdNotOne)
QFORMS_DEFINE_ERROR(CongruenceViolated)
QFORMS_DEFINE_ERROR(HypothesisViolated)
QFORMS_DEFINE_ERROR(UnknownIdentity)
QFORMS_DEFINE_ERROR(BadParams)
QFORMS_DEFINE_ERROR(BadModulus)
QFORMS_DEFINE_ERROR(ParseError)
QFORMS_DEFINE_ERROR(InvalidArgument)
QFORMS_DEFINE_ERROR(CrossCheckFailed)

#undef QFORMS_DEFINE_ERROR

}  // namespace qforms
