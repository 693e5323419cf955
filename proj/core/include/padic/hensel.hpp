#pragma once

#include "padic/lipschitz.hpp"
#include "padic/number.hpp"
#include "padic/polynomial.hpp"

namespace padic::hensel {

/// A certified starting point for digit lifting: the residual bound is
/// re-verified by direct evaluation, never assumed from the recurrence.
struct LiftWitness {
  PadicNumber seed;
  /// Residual is verified o[p^e] for e = certified_modulus_exponent,
  /// i.e. v_p(F(seed)) > e. kInfinity-capped when the residual is exact 0.
  std::int64_t certified_modulus_exponent;
  /// s = v_p(k) (equivalently v_p(F') at the seed for the monomial part).
  std::int32_t derivative_valuation;
};

/// Classical Hensel lifting (quadratic Newton steps r <- r - F(r)/F'(r)).
/// Requires v_p(F(x_star)) >= 2i+1 and v_p(F'(x_star)) = i, both checked;
/// returns the root r with F(r) ≡ 0 at absolute precision N and
/// r ≡ x_star (mod p^{i+1}).
PadicNumber classical_hensel(const Polynomial& F, const PadicNumber& x_star,
                             std::int32_t i, std::int32_t N);

/// Newton-style seed iteration
///     x <- x + (a - x^k) / (k x^{k-1})
/// run until the verified residual strictly clears the o[k^2] bar
/// (v_p(x^k - a) >= 2s+2, or exact zero). Requires xi in Sol_p(x^k - a)
/// and condition II: a = a_0^{p^s} + o[p^s]; throws ConditionIIFailed
/// otherwise. The witness stays in B_1(xi) throughout.
LiftWitness newton_seed(const PadicNumber& a, std::uint64_t k,
                        std::uint64_t xi);

/// Digit-by-digit generalized lift: from a seed with F(seed) = o[p^{2s}],
/// each step solves the single linear congruence
///     F(x_n) + k alpha_n p^{s+n} x_n^{k-1} = o[p^{2s+n}]
/// for alpha_n in {0..p-1} (unique since m x_0^{k-1} is a unit mod p) and
/// gains one certified digit. Residuals are re-verified by evaluation at
/// every step. Returns the root to N digits with v_p(F(root)) >= N.
PadicNumber digit_lift(const PerturbedMonomial& F, const LiftWitness& seed,
                       std::int32_t N);

}  // namespace padic::hensel
