#pragma once

#include <cstdint>
#include <vector>

#include "padic/number.hpp"

namespace padic::solve {

/// Parameters of the Bethe-Potts rational map
///     f_{b,c,d}(x) = ((b x - c) / (x - d))^k,   b, c, d in E_p, c != bd,
/// under the fixed-point theorem hypotheses
///     d = 1 - b + c,   |b - 1|_p < |(c - 1)^2|_p < |k^2|_p.
/// Construction validates every flag (HypothesisViolated names the first
/// failing one; the d-identity is checked before E_p membership so that a
/// wrong d reports as "d != 1 - b + c").
class FixedPointProblem {
 public:
  FixedPointProblem(PadicNumber b, PadicNumber c, PadicNumber d,
                    std::uint64_t k);

  const PadicNumber& b() const noexcept { return b_; }
  const PadicNumber& c() const noexcept { return c_; }
  const PadicNumber& d() const noexcept { return d_; }
  std::uint64_t k() const noexcept { return k_; }
  Prime prime() const noexcept { return b_.prime(); }

  std::int64_t v_b_minus_1() const noexcept { return vb1_; }
  std::int64_t v_c_minus_1() const noexcept { return vc1_; }

  /// f_{b,c,d}(x) by direct rational evaluation; throws PoleAtFixedPoint
  /// if x - d is not provably nonzero at the working precision.
  PadicNumber eval_map(const PadicNumber& x) const;

 private:
  PadicNumber b_, c_, d_;
  std::uint64_t k_;
  std::int64_t vb1_, vc1_;
};

struct FixedPointReport {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::uint64_t kappa_p = 0;  // gcd(k, p-1)
  /// x_(0) = 1 first, then x_(i) = y_(i)^k ordered by the residue of y_(i).
  std::vector<PadicNumber> points;
};

/// All fixed points of f_{b,c,d}: exactly kappa_p + 1 of them, each in
/// E_p, each verified |f(x) - x|_p <= p^{-N} by direct evaluation of the
/// rational map (never trusting the polynomial reduction alone).
FixedPointReport fixed_points(const FixedPointProblem& prob, std::int32_t N);

}  // namespace padic::solve
