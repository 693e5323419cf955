#pragma once

#include <cstdint>
#include <vector>

#include "padic/number.hpp"
#include "padic/prime.hpp"

namespace padic::residue {

/// k = m * p^s with gcd(m, p) = 1.
struct KDecomposition {
  std::uint64_t k;
  std::uint64_t m;
  std::uint32_t s;
};

KDecomposition decompose_k(std::uint64_t k, Prime p);

/// Sol_p(x^k - a) = {xi in F_p : xi^k ≡ a_0 (mod p)} and its cardinality.
struct ResidueAnalysis {
  std::uint64_t p;
  std::uint64_t k;
  std::uint64_t a0;
  std::vector<std::uint64_t> sol_set;  // ascending
  std::uint64_t kappa_p;

  bool empty() const noexcept { return sol_set.empty(); }
};

/// Euler-type criterion: x^m ≡ b (mod p) is solvable iff
/// b^{(p-1)/d} ≡ 1 (mod p) with d = gcd(m, p-1).
bool power_residue_test(long long b, std::uint64_t m, Prime p);

/// Exhaustive scan of F_p^* (the correctness-first route; the Euler
/// criterion is cross-checked internally). a must be a unit.
ResidueAnalysis sol_p(std::uint64_t k, const PadicNumber& a, Prime p);

/// Same scan given the leading digit directly.
ResidueAnalysis sol_p_digit(std::uint64_t k, std::uint64_t a0, Prime p);

}  // namespace padic::residue
