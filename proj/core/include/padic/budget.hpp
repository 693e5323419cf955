#pragma once

#include <cstdint>

#include "padic/error.hpp"

namespace padic {

/// Output precision plus the internal slack an algorithm runs with.
/// Solvers default to margin 2s + 4: enough to certify the o[k^2] seed
/// residual certification and trim back to N digits on output.
struct PrecisionBudget {
  std::int32_t requested_digits;
  std::int32_t working_margin;

  PrecisionBudget(std::int32_t requested, std::int32_t margin)
      : requested_digits(requested), working_margin(margin) {
    if (requested < 1 || margin < 0)
      throw Error(ErrorCode::InvalidArgument,
                  "precision budget needs requested >= 1 and margin >= 0");
  }

  std::int32_t working() const noexcept {
    return requested_digits + working_margin;
  }

  static PrecisionBudget for_solver(std::int32_t requested, std::int32_t s) {
    return PrecisionBudget(requested, 2 * s + 4);
  }
};

}  // namespace padic
