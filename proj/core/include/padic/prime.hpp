#pragma once

#include <cstdint>

#include "padic/error.hpp"

namespace padic {

/// An odd prime p >= 3, verified at construction.
///
/// Primality is decided deterministically: trial division for small p,
/// Miller-Rabin with the witness set {2,3,...,37} above (exact for all
/// 64-bit inputs). p = 2 is rejected: the solver theorems require odd p,
/// and rejecting uniformly at the root of the type system keeps invalid
/// theorem applications unrepresentable.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }

  friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(Prime a, Prime b) noexcept { return a.p_ != b.p_; }

 private:
  std::uint64_t p_;
};

/// Deterministic primality test for any 64-bit n (no smoothness assumptions).
bool is_prime_u64(std::uint64_t n);

/// (a * b) mod m without overflow.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// (a ^ e) mod m.
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Inverse of a modulo m, gcd(a, m) = 1 required.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

}  // namespace padic
