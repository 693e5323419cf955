#include "padic/fixed_point.hpp"

#include <numeric>

#include "padic/polynomial.hpp"
#include "padic/residue.hpp"
#include "padic/solvers.hpp"

namespace padic::solve {
namespace {

using i64 = std::int64_t;

PadicNumber one_like(Prime p, const PadicNumber& shape) {
  return PadicNumber::from_integer(
      1, p, std::max<std::int32_t>(2, shape.rel_precision()));
}

}  // namespace

FixedPointProblem::FixedPointProblem(PadicNumber b, PadicNumber c,
                                     PadicNumber d, std::uint64_t k)
    : b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), k_(k) {
  if (k_ == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  Prime p = b_.prime();
  if (c_.prime() != p || d_.prime() != p)
    throw Error(ErrorCode::PrimeMismatch, "b, c, d over different primes");
  auto [kk, m, s] = residue::decompose_k(k_, p);

  PadicNumber one = one_like(p, b_);
  // checked before E_p membership so a wrong d reports by name
  if (!sub(d_, add(sub(one, b_), c_)).is_zero())
    throw Error(ErrorCode::HypothesisViolated, "d != 1 - b + c");
  if (!in_ep(b_))
    throw Error(ErrorCode::HypothesisViolated, "b not in E_p");
  if (!in_ep(c_))
    throw Error(ErrorCode::HypothesisViolated, "c not in E_p");
  if (!in_ep(d_))
    throw Error(ErrorCode::HypothesisViolated, "d not in E_p");

  PadicNumber bm1 = sub(b_, one);
  PadicNumber cm1 = sub(c_, one);
  if (cm1.is_zero())
    throw Error(ErrorCode::HypothesisViolated,
                "norm chain |b-1| < |(c-1)^2| requires c != 1");
  if (cm1.is_apparent_zero() || bm1.is_apparent_zero())
    throw Error(ErrorCode::InsufficientPrecision,
                "v_p(b-1) and v_p(c-1) must be resolvable");
  if (bm1.is_exact_zero())
    throw Error(ErrorCode::HypothesisViolated,
                "b = 1 degenerates the map");
  vb1_ = bm1.valuation();
  vc1_ = cm1.valuation();
  // |b-1| <= |(c-1)^2| < |k^2|; the left bound is non-strict, which is
  // all the polynomial reduction consumes (|b-1| < |k^2|, |c-1| < |k|)
  if (!(vc1_ >= static_cast<i64>(s) + 1 && vb1_ >= 2 * vc1_))
    throw Error(ErrorCode::HypothesisViolated,
                "norm chain |b-1|_p <= |(c-1)^2|_p < |k^2|_p fails");
  if (sub(c_, mul(b_, d_)).is_zero())
    throw Error(ErrorCode::HypothesisViolated,
                "c = bd degenerates the map to a constant");
}

PadicNumber FixedPointProblem::eval_map(const PadicNumber& x) const {
  PadicNumber num = sub(mul(b_, x), c_);
  PadicNumber den = sub(x, d_);
  if (den.is_zero())
    throw Error(ErrorCode::PoleAtFixedPoint,
                "x - d vanishes at working precision");
  return pow(div(num, den), k_);
}

FixedPointReport fixed_points(const FixedPointProblem& prob,
                              std::int32_t N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N >= 1 required");
  Prime p = prob.prime();
  auto [k, m, s] = residue::decompose_k(prob.k(), p);
  const std::int32_t si = static_cast<std::int32_t>(s);

  FixedPointReport report;
  report.p = p.value();
  report.k = k;
  report.kappa_p = std::gcd(k, p.value() - 1);

  // the quotient (bx-c)/(x-d) at a fixed point has valuation-(vb1+s)
  // numerator and denominator; keep that many extra digits so the
  // verification below can still certify N digits
  const std::int32_t margin =
      static_cast<std::int32_t>(prob.v_b_minus_1()) + si + 6;
  const std::int32_t Ny = N + margin;

  // reduced fixed-point polynomial y^k - c - (b-1) sum_{j=1}^{k-1} y^{k-j}.
  // Subtracting 1 must not cap b's own precision, and the leading 1 (an
  // exact literal) gets enough digits to carry the lift's working window.
  PadicNumber bm1 = sub(
      prob.b(),
      PadicNumber::from_integer(1, p, prob.b().rel_precision()));
  std::vector<PadicNumber> coeffs;
  coeffs.reserve(static_cast<std::size_t>(k) + 1);
  coeffs.push_back(negate(prob.c()));
  for (std::uint64_t j = 1; j < k; ++j) coeffs.push_back(negate(bm1));
  coeffs.push_back(PadicNumber::from_integer(1, p, Ny + 2 * si + 8));
  SolutionReport poly_report =
      solve_polynomial(Polynomial(p, std::move(coeffs)), Ny);

  if (!poly_report.solvable() || poly_report.kappa_p != report.kappa_p)
    throw Error(ErrorCode::VerificationFailed,
                "the reduced polynomial must have exactly gcd(k, p-1) "
                "roots under the stated hypotheses");

  std::vector<PadicNumber> points;
  points.push_back(PadicNumber::from_integer(1, p, N));
  for (const auto& entry : poly_report.roots)
    points.push_back(truncate_abs(pow(entry.root, prob.k()), N));

  for (std::size_t i = 0; i < points.size(); ++i) {
    const PadicNumber& x = points[i];
    if (!in_ep(x))
      throw Error(ErrorCode::VerificationFailed,
                  "fixed point outside E_p");
    // verify at full precision, then report the N-digit truncation
    PadicNumber x_full =
        i == 0 ? PadicNumber::from_integer(1, p, Ny)
               : pow(poly_report.roots[i - 1].root, prob.k());
    if (sub(prob.eval_map(x_full), x_full).valuation_lower_bound() < N)
      throw Error(ErrorCode::VerificationFailed,
                  "|f(x) - x|_p > p^{-N} for a reported fixed point");
    for (std::size_t j = 0; j < i; ++j)
      if (sub(points[i], points[j]).is_zero())
        throw Error(ErrorCode::VerificationFailed,
                    "fixed points collide at output precision");
  }

  report.points = std::move(points);
  return report;
}

}  // namespace padic::solve
