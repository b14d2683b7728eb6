#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bvl {

enum class ErrorKind {
  InconsistentPresentation,
  WeightViolation,
  IndexOutOfRange,
  StepBudgetExceeded,
  NotTwoGeneratedGroup,
  NotPGroup,
  IdentityInput,
  NonCentralGenerator,
  NonNormalSubgroup,
  EvenPrime,
  BadParameters,
  UnsupportedPrimeForFamily,
  GroupTooLargeForOracle,
  BoundExceeded,
  Inconclusive,
  NotFaithful,
  CoprimalityViolation,
  SyntaxError,
  UnknownGenerator,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace bvl
