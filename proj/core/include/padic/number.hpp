#pragma once

#include <cstdint>
#include <vector>

#include "padic/error.hpp"
#include "padic/prime.hpp"

namespace padic {

enum class ArithOp { Add, Sub, Mul };

/// An element of Q_p held as a truncated canonical expansion
///
///     x = p^v (d_0 + d_1 p + d_2 p^2 + ...),   0 <= d_i < p,  d_0 != 0.
///
/// Digits are little-endian, one digit per machine word. The value is
/// known exactly modulo p^A where A = v + (number of stored digits) is
/// the absolute precision.
///
/// Three states exist:
///   - nonzero:        v finite, at least one digit, d_0 != 0;
///   - exact zero:     valuation +infinity sentinel, no digits;
///   - apparent zero:  all digits cancelled at some finite precision A.
///     The value is known to be ≡ 0 (mod p^A) and nothing more. Asking
///     for its valuation throws PrecisionExhausted: a claim "v_p(x) = v"
///     must be provable from stored digits, never assumed. Callers that
///     only need the provable fact use valuation_lower_bound().
class PadicNumber {
 public:
  /// +infinity sentinel for the valuation of exact zero.
  static constexpr std::int64_t kInfinity = INT64_MAX;

  /// Exact zero over p.
  static PadicNumber zero(Prime p);

  /// A value known only to vanish modulo p^known_exp.
  static PadicNumber zero_mod(Prime p, std::int64_t known_exp);

  /// Canonical expansion of a signed integer to `digits` unit digits.
  static PadicNumber from_integer(long long n, Prime p, std::int32_t digits);

  /// num/den as an element of Q_p; valuation v_p(num) - v_p(den).
  static PadicNumber from_rational(long long num, long long den, Prime p,
                                   std::int32_t digits);

  /// Assemble from raw parts (digits little-endian, d_0 != 0 enforced).
  static PadicNumber from_unit_digits(Prime p, std::int64_t valuation,
                                      std::vector<std::uint64_t> digits);

  Prime prime() const noexcept { return prime_; }

  bool is_zero() const noexcept { return digits_.empty(); }
  bool is_exact_zero() const noexcept {
    return digits_.empty() && known_exp_ == kInfinity;
  }
  bool is_apparent_zero() const noexcept {
    return digits_.empty() && known_exp_ != kInfinity;
  }
  bool is_unit() const noexcept { return !digits_.empty() && valuation_ == 0; }

  /// v_p(x); kInfinity for exact zero; throws PrecisionExhausted for an
  /// apparent zero (the valuation is not provable from stored digits).
  std::int64_t valuation() const;

  /// Largest e with "v_p(x) >= e" provable: the valuation itself for a
  /// nonzero value, A for an apparent zero, kInfinity for exact zero.
  std::int64_t valuation_lower_bound() const noexcept;

  /// Absolute precision A: the value is known modulo p^A. kInfinity for
  /// exact zero.
  std::int64_t abs_precision() const noexcept { return known_exp_; }

  /// Number of stored unit digits.
  std::int32_t rel_precision() const noexcept {
    return static_cast<std::int32_t>(digits_.size());
  }

  const std::vector<std::uint64_t>& unit_digits() const noexcept {
    return digits_;
  }

  /// d_0 of a nonzero value.
  std::uint64_t leading_digit() const;

  /// Digit at exponent e of the full expansion (0 below the valuation).
  /// Throws PrecisionExhausted if e is at or beyond the known precision.
  std::uint64_t digit_at(std::int64_t e) const;

  /// Stored-representation equality (prime, state, valuation, digits).
  friend bool operator==(const PadicNumber& a, const PadicNumber& b);
  friend bool operator!=(const PadicNumber& a, const PadicNumber& b) {
    return !(a == b);
  }

 private:
  explicit PadicNumber(Prime p) : prime_(p) {}

  Prime prime_;
  std::int64_t valuation_ = kInfinity;
  std::int64_t known_exp_ = kInfinity;
  std::vector<std::uint64_t> digits_;

  friend PadicNumber mul(const PadicNumber&, const PadicNumber&);
  friend PadicNumber negate(const PadicNumber&);
  friend PadicNumber invert_unit(const PadicNumber&);
  friend PadicNumber shift_valuation(const PadicNumber&, std::int64_t);
  friend PadicNumber truncate_abs(const PadicNumber&, std::int64_t);
  friend PadicNumber pad_exact(const PadicNumber&, std::int32_t);
};

/// Exact result truncated to the provable precision:
///   add/sub: known mod p^min(A_x, A_y), valuation recomputed from the
///            first surviving digit (apparent zero on full cancellation);
///   mul:     |xy|_p = |x|_p |y|_p exactly, unit digits to min(N_x, N_y).
PadicNumber arith(const PadicNumber& x, const PadicNumber& y, ArithOp op);

PadicNumber add(const PadicNumber& x, const PadicNumber& y);
PadicNumber sub(const PadicNumber& x, const PadicNumber& y);
PadicNumber mul(const PadicNumber& x, const PadicNumber& y);
PadicNumber negate(const PadicNumber& x);

inline PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  return add(x, y);
}
inline PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) {
  return sub(x, y);
}
inline PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  return mul(x, y);
}
inline PadicNumber operator-(const PadicNumber& x) { return negate(x); }

/// y with x*y = 1 to x's relative precision; y.valuation = -x.valuation.
PadicNumber invert_unit(const PadicNumber& x);

/// x / y as mul(x, invert_unit(y)).
PadicNumber div(const PadicNumber& x, const PadicNumber& y);

/// Repeated-squaring power, k >= 1; valuation k * v_p(x).
PadicNumber pow(const PadicNumber& x, std::uint64_t k);

/// Membership in E_p = {x : |x - 1|_p < p^{-1/(p-1)}}; for odd p this is
/// exactly "unit with leading digit 1".
bool in_ep(const PadicNumber& x);

/// x = p^l * unit with unit in Z_p^*; returns (l, unit).
std::pair<std::int64_t, PadicNumber> unit_decompose(const PadicNumber& x);

/// Multiply by p^delta (shifts valuation and absolute precision).
PadicNumber shift_valuation(const PadicNumber& x, std::int64_t delta);

/// Forget digits at and above exponent `abs_exp` (honest truncation; a
/// value may degrade to an apparent zero).
PadicNumber truncate_abs(const PadicNumber& x, std::int64_t abs_exp);

/// Treat x's stored digits as an exact integer representative and extend
/// with zeros to `digits` unit digits. Only valid where the continuation
/// is genuinely free (e.g. digit-lift seeds, where later corrections own
/// every extended position).
PadicNumber pad_exact(const PadicNumber& x, std::int32_t digits);

/// Provable "v_p(x - y) >= e".
bool congruent_mod(const PadicNumber& x, const PadicNumber& y,
                   std::int64_t e);

}  // namespace padic
