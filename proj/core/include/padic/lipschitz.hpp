#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "padic/number.hpp"
#include "padic/polynomial.hpp"

namespace padic {

/// An evaluable f : Z_p -> Z_p with a declared Lipschitz exponent lambda,
/// i.e. |f(x) - f(y)|_p <= p^lambda |x - y|_p. Precision contract: input
/// known mod p^A yields output delivered mod p^{A - lambda}.
///
/// The declared exponent is spot-verified on random pairs at construction;
/// a violation is a construction error, not a latent solver failure.
///
/// The perturbed-root theorem asks for L <= p^s; the polynomial reduction
/// proof actually produces L < 1. We enforce the theorem's bound (<=) and
/// polynomial-backed instances always carry lambda = 0.
class LipschitzFunction {
 public:
  using Evaluator = std::function<PadicNumber(const PadicNumber&)>;

  /// General evaluator; runs the spot-check (deterministic pairs).
  LipschitzFunction(Evaluator f, std::int32_t lipschitz_exponent, Prime p);

  /// Polynomial with Z_p coefficients: provably 1-Lipschitz (lambda = 0),
  /// no spot-check needed.
  static LipschitzFunction from_polynomial(Polynomial poly);

  PadicNumber operator()(const PadicNumber& x) const { return eval_(x); }
  std::int32_t lipschitz_exponent() const noexcept { return lambda_; }
  Prime prime() const noexcept { return prime_; }

  /// The backing polynomial, when constructed from one (CLI route).
  const std::optional<Polynomial>& polynomial() const noexcept {
    return poly_;
  }

 private:
  LipschitzFunction(Evaluator f, std::int32_t lambda, Prime p,
                    std::optional<Polynomial> poly)
      : eval_(std::move(f)), lambda_(lambda), prime_(p),
        poly_(std::move(poly)) {}

  Evaluator eval_;
  std::int32_t lambda_;
  Prime prime_;
  std::optional<Polynomial> poly_;
};

/// F(x) = x^k - a + eps * f(x): the perturbed monomial of the generalized
/// lift. eps = exact zero (with no f) recovers the pure monomial.
class PerturbedMonomial {
 public:
  PerturbedMonomial(std::uint64_t k, PadicNumber a);  // pure x^k - a
  PerturbedMonomial(std::uint64_t k, PadicNumber a, PadicNumber epsilon,
                    LipschitzFunction f);

  PadicNumber eval(const PadicNumber& x) const;

  std::uint64_t k() const noexcept { return k_; }
  const PadicNumber& target() const noexcept { return a_; }
  const PadicNumber& epsilon() const noexcept { return eps_; }
  const std::optional<LipschitzFunction>& perturbation() const noexcept {
    return f_;
  }
  Prime prime() const noexcept { return a_.prime(); }

 private:
  std::uint64_t k_;
  PadicNumber a_;
  PadicNumber eps_;
  std::optional<LipschitzFunction> f_;
};

}  // namespace padic
