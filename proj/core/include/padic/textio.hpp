#pragma once

#include <string>

#include "padic/number.hpp"

namespace padic {

/// Canonical textual form "d0,d1,...,d_{N-1}@v" (digits little-endian,
/// v = valuation), e.g. "4,3,4,4@0". Zero prints as "0".
std::string format_padic(const PadicNumber& x);

/// Parses a p-adic literal at the given precision. Accepted forms:
///   plain integer        "-6"
///   rational             "num/den"
///   canonical digit form "4,3,4,4@0"
PadicNumber parse_padic(const std::string& text, Prime p,
                        std::int32_t digits);

}  // namespace padic
