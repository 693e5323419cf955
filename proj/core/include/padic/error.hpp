#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Machine-readable failure categories. Solvability verdicts (NoSolution
/// and its reasons) are *not* errors; they travel inside reports. Errors
/// are reserved for contract violations and unprovable claims.
enum class ErrorCode {
  InvalidPrime,         // p composite, p < 3, or p = 2
  InvalidArgument,      // malformed call (zero input, k = 0, bad precision)
  ZeroDenominator,      // from_rational with den = 0
  PrimeMismatch,        // mixing values over different primes
  PrecisionExhausted,   // cancellation left zero known digits
  ZeroInverse,          // invert_unit on (apparent) zero
  ZeroDecompose,        // unit_decompose on (apparent) zero
  NotCoprime,           // power_residue_test with p | b
  NotAUnit,             // operation requires valuation 0
  HypothesisViolated,   // a theorem precondition failed (message names it)
  ConditionIIFailed,    // a != a_0^{p^s} + o[p^s]
  SeedTooCoarse,        // digit_lift seed residual misses the o[p^{2s}] bar
  StalledStep,          // digit_lift congruence unsolvable (unreachable)
  EpsilonTooLarge,      // |eps|_p >= |k^2|_p
  LipschitzTooLoose,    // declared exponent exceeds s
  LipschitzViolated,    // spot-check failed at construction
  NotPrincipalDomain,   // principal root outside |a-1|_p < |k|_p regime
  NonMonic,             // polynomial input without leading 1
  PoleAtFixedPoint,     // x - d vanished where a fixed point was claimed
  BudgetExceeded,       // oracle scan or modulus beyond documented budget
  InsufficientPrecision,// input digits cannot support the requested claim
  VerificationFailed,   // a returned value failed its residual check
  ParseError,           // bad literal / expression
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace padic
