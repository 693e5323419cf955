#include "padic/error.hpp"

namespace padic {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ZeroDecompose: return "ZeroDecompose";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ConditionIIFailed: return "ConditionIIFailed";
    case ErrorCode::SeedTooCoarse: return "SeedTooCoarse";
    case ErrorCode::StalledStep: return "StalledStep";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::LipschitzTooLoose: return "LipschitzTooLoose";
    case ErrorCode::LipschitzViolated: return "LipschitzViolated";
    case ErrorCode::NotPrincipalDomain: return "NotPrincipalDomain";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::PoleAtFixedPoint: return "PoleAtFixedPoint";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace padic
