#include "betadix/error.hpp"

namespace betadix {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_monic: return "NotMonic";
    case ErrorCode::reducible: return "Reducible";
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::zero_divisor: return "ZeroDivisor";
    case ErrorCode::norm_too_small: return "NormTooSmall";
    case ErrorCode::not_representative: return "NotRepresentative";
    case ErrorCode::state_budget_exceeded: return "StateBudgetExceeded";
    case ErrorCode::not_terminating: return "NotTerminating";
    case ErrorCode::closure_budget_exceeded: return "ClosureBudgetExceeded";
    case ErrorCode::ramified_prime: return "RamifiedPrime";
    case ErrorCode::not_degree_one: return "NotDegreeOne";
    case ErrorCode::precision_exhausted: return "PrecisionExhausted";
    case ErrorCode::out_of_domain: return "OutOfDomain";
    case ErrorCode::not_coprime: return "NotCoprime";
    case ErrorCode::root_of_unity: return "RootOfUnity";
    case ErrorCode::hypothesis_violated: return "HypothesisViolated";
    case ErrorCode::unsupported: return "Unsupported";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

bool is_hypothesis_rejection(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ramified_prime:
    case ErrorCode::not_degree_one:
    case ErrorCode::not_coprime:
    case ErrorCode::root_of_unity:
      return true;
    default:
      return false;
  }
}

}  // namespace betadix
