#pragma once

#include <cstdint>
#include <vector>

#include "padic/number.hpp"
#include "padic/prime.hpp"

namespace padic::oracle {

/// The oracle is pure integer arithmetic — no PadicNumber dependence on
/// the scanning side — so that it stays independent of the code under
/// test and simple enough to trust by inspection.

/// Dense integer polynomial, ascending coefficients.
using IntPolynomial = std::vector<long long>;

/// Result of an exhaustive scan modulo p^M. Solutions are merged into
/// classes modulo p^class_exponent; each representative lifts to an
/// exact solution mod p^M. For root scans class_exponent = M - s (within
/// one ball, roots mod p^M are determined mod p^{M-s} because
/// |x^k - y^k|_p = |k|_p |x - y|_p). The fixed-point scan uses its own
/// modulus, documented at brute_force_fixed_points.
struct OracleCount {
  std::int32_t modulus_exponent;   // M
  std::int32_t class_exponent;     // exponent of the merge modulus
  std::vector<std::uint64_t> representatives;  // sorted ascending
  std::uint64_t count = 0;
};

/// Max p^M the scans accept (documented evaluation budget).
constexpr std::uint64_t kScanBudget = 100'000'000;

/// Exhaustive root count of F modulo p^M over units (p does not divide x),
/// classes merged mod p^{M-s}. Requires M >= 2s + 2. For theorem-conforming
/// F this equals the number of Z_p roots.
OracleCount brute_force_count(const IntPolynomial& F, Prime p,
                              std::uint64_t k, std::int32_t M);

/// True iff v_p(F(r)) >= e by direct integer evaluation of the truncated
/// representative. r must lie in Z_p with absolute precision >= e.
bool verify_root(const IntPolynomial& F, const PadicNumber& r,
                 std::int32_t e);

/// Exhaustive fixed-point count of f_{b,c,d}(x) = ((bx-c)/(x-d))^k over
/// units mod p^M.
///
/// The cleared congruence (bx-c)^k ≡ x(x-d)^k (mod p^M) is useless here:
/// its derivative at a fixed point has valuation ~ v_p(b-1)+s, so the
/// mod-p^M solution set blurs far beyond p^{M-s} classes. Instead each
/// candidate is tested through the divided form: with v = v_p(x-d), the
/// unit quotient q = (bx-c)/(x-d) is computed mod p^{M-v} and x is
/// accepted iff q^k ≡ x (mod p^{M-v}). Under the theorem hypotheses the
/// accepted set around every true fixed point is the ball of radius
/// p^{-(M - v_p(c-1))} — at x=1 the multiplier is ≡ 1 so the fuzz depth is
/// M - v_p(1-d) = M - v_p(c-1); at the other fixed points it is
/// M - v_den - v_p(multiplier) with v_den = v_p(b-1)+s and multiplier
/// valuation v_p(c-1) - v_p(b-1) - s, giving the same depth — so classes
/// are merged mod p^{M - v_p(c-1)}.
///
/// Candidates with x !≡ 1 (mod p) are still checked (at mod-p resolution,
/// where the quotient is a unit); none can pass, which realizes the
/// Fix(f) ⊂ E_p restriction as a scan fact rather than an assumption.
OracleCount brute_force_fixed_points(long long b, long long c, long long d,
                                     std::uint64_t k, Prime p,
                                     std::int32_t M);

/// Truncated unit representative of r mod p^e (helper for cross-checks).
std::uint64_t to_integer_mod(const PadicNumber& r, std::int32_t e);

}  // namespace padic::oracle
