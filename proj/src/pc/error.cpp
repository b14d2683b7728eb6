#include "bvl/error.hpp"

namespace bvl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorKind::WeightViolation: return "WeightViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::NotTwoGeneratedGroup: return "NotTwoGeneratedGroup";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::IdentityInput: return "IdentityInput";
    case ErrorKind::NonCentralGenerator: return "NonCentralGenerator";
    case ErrorKind::NonNormalSubgroup: return "NonNormalSubgroup";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::UnsupportedPrimeForFamily: return "UnsupportedPrimeForFamily";
    case ErrorKind::GroupTooLargeForOracle: return "GroupTooLargeForOracle";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::CoprimalityViolation: return "CoprimalityViolation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace bvl
