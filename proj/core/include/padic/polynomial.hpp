#pragma once

#include <vector>

#include "padic/number.hpp"

namespace padic {

/// Dense polynomial over Q_p, coefficients ascending (c_0 + c_1 x + ...).
class Polynomial {
 public:
  Polynomial(Prime p, std::vector<PadicNumber> ascending_coeffs);

  /// Convenience: integer coefficients, expanded at `digits` precision.
  static Polynomial from_integers(Prime p,
                                  const std::vector<long long>& ascending,
                                  std::int32_t digits);

  Prime prime() const noexcept { return prime_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<PadicNumber>& coefficients() const noexcept {
    return coeffs_;
  }
  const PadicNumber& coefficient(std::size_t i) const { return coeffs_.at(i); }

  PadicNumber eval(const PadicNumber& x) const;  // Horner
  Polynomial derivative() const;

  /// True when the leading coefficient is the stored constant one.
  bool is_monic() const;

 private:
  Prime prime_;
  std::vector<PadicNumber> coeffs_;
};

/// x scaled by a small exact integer without precision loss.
PadicNumber scale_by_integer(const PadicNumber& x, long long c);

}  // namespace padic
