#include "padic/hensel.hpp"

#include <algorithm>

#include "padic/budget.hpp"
#include "padic/residue.hpp"

namespace padic::hensel {
namespace {

using i64 = std::int64_t;

i64 lb(const PadicNumber& x) { return x.valuation_lower_bound(); }

std::int32_t ceil_log2(std::int32_t n) {
  std::int32_t b = 0;
  while ((1 << b) < n) ++b;
  return b;
}

// single-digit alpha * p^e as an exact value with absolute precision W
PadicNumber exact_term(Prime p, std::uint64_t alpha, i64 e,
                       std::int32_t W) {
  PadicNumber t = PadicNumber::from_unit_digits(p, e, {alpha});
  return pad_exact(t, std::max<std::int32_t>(1, W - static_cast<std::int32_t>(e)));
}

}  // namespace

PadicNumber classical_hensel(const Polynomial& F, const PadicNumber& x_star,
                             std::int32_t i, std::int32_t N) {
  if (i < 0 || N < 1)
    throw Error(ErrorCode::InvalidArgument, "need i >= 0 and N >= 1");
  Prime p = F.prime();
  if (x_star.prime() != p)
    throw Error(ErrorCode::PrimeMismatch, "x_star over wrong prime");
  if (x_star.is_zero() || x_star.valuation() < 0)
    throw Error(ErrorCode::InvalidArgument, "x_star must be in Z_p");
  if (x_star.abs_precision() < i + 1)
    throw Error(ErrorCode::InsufficientPrecision,
                "x_star must be known mod p^{i+1}");

  // Division by F' (valuation i) costs i digits per Newton step; the
  // residual excess doubles per step, so the step count is logarithmic.
  std::int32_t steps_bound = ceil_log2(std::max(2, N)) + 4;
  std::int32_t W = N + 2 * i + 6 + i * steps_bound;

  PadicNumber r = pad_exact(truncate_abs(x_star, W), W);
  Polynomial dF = F.derivative();

  PadicNumber rho = F.eval(r);
  if (lb(rho) < 2 * i + 1)
    throw Error(ErrorCode::HypothesisViolated,
                "F(x_star) != 0 (mod p^{2i+1}) for i = " + std::to_string(i));
  {
    PadicNumber d = dF.eval(r);
    if (d.is_zero() || d.valuation() != i)
      throw Error(ErrorCode::HypothesisViolated,
                  "v_p(F'(x_star)) != " + std::to_string(i));
  }

  bool converged = false;
  for (std::int32_t step = 0; step <= steps_bound + 6; ++step) {
    if (rho.is_exact_zero() || lb(rho) >= N + i) {
      converged = true;
      break;
    }
    PadicNumber d = dF.eval(r);
    auto [vd, d_unit] = unit_decompose(d);
    // vd stays equal to i throughout the ball around x_star
    PadicNumber corr =
        mul(shift_valuation(rho, -vd), invert_unit(d_unit));
    r = sub(r, corr);
    rho = F.eval(r);
  }
  if (!converged)
    throw Error(ErrorCode::VerificationFailed,
                "Newton iteration failed to converge");

  PadicNumber out = truncate_abs(r, N);
  if (lb(F.eval(out)) < N)
    throw Error(ErrorCode::VerificationFailed,
                "lifted root failed its residual check");
  if (!congruent_mod(out, x_star, i + 1))
    throw Error(ErrorCode::VerificationFailed,
                "lifted root left the p^{i+1} ball of x_star");
  return out;
}

LiftWitness newton_seed(const PadicNumber& a, std::uint64_t k,
                        std::uint64_t xi) {
  Prime p = a.prime();
  if (a.is_zero() || a.valuation() != 0)
    throw Error(ErrorCode::NotAUnit, "newton_seed needs a unit target");
  if (k > (std::uint64_t{1} << 62))
    throw Error(ErrorCode::BudgetExceeded, "k exceeds 2^62");
  auto [kk, m, s] = residue::decompose_k(k, p);
  if (xi == 0 || xi >= p.value() ||
      powmod_u64(xi, k, p.value()) != a.leading_digit())
    throw Error(ErrorCode::HypothesisViolated,
                "xi = " + std::to_string(xi) + " is not in Sol_p(x^k - a)");
  if (a.abs_precision() < 2 * static_cast<i64>(s) + 4)
    throw Error(ErrorCode::InsufficientPrecision,
                "a must be known mod p^{2s+4}");

  // condition II: a = a_0^{p^s} + o[p^s]
  std::uint64_t ps = 1;
  for (std::uint32_t j = 0; j < s; ++j) ps *= p.value();
  PadicNumber a0ps =
      pow(PadicNumber::from_integer(
              static_cast<long long>(a.leading_digit()), p,
              static_cast<std::int32_t>(s) + 2),
          ps);
  if (!congruent_mod(a, a0ps, static_cast<i64>(s) + 1))
    throw Error(ErrorCode::ConditionIIFailed,
                "a != a_0^{p^s} + o[p^s]");

  const std::int32_t si = static_cast<std::int32_t>(s);
  // s digits erode per iteration (unit division after factoring p^s out
  // of k); at most s+3 iterations are ever needed from residual s+1.
  const std::int32_t W = si * si + 5 * si + 8;
  const i64 bar = 2 * static_cast<i64>(s) + 2;

  PadicNumber x = PadicNumber::from_integer(static_cast<long long>(xi), p, W);
  for (std::int32_t iter = 0; iter <= si + 6; ++iter) {
    PadicNumber rho = sub(a, pow(x, k));
    if (rho.is_exact_zero())
      return {x, PadicNumber::kInfinity, si};
    if (lb(rho) >= bar)
      return {x, lb(rho) - 1, si};
    if (rho.is_apparent_zero())
      throw Error(ErrorCode::InsufficientPrecision,
                  "working precision exhausted before the o[k^2] bar");
    if (rho.valuation() < static_cast<i64>(s) + 1)
      throw Error(ErrorCode::VerificationFailed,
                  "seed residual shallower than o[p^s]");
    PadicNumber xk1 =
        k == 1 ? PadicNumber::from_integer(1, p, W) : pow(x, k - 1);
    PadicNumber denom =
        scale_by_integer(xk1, static_cast<long long>(m));
    PadicNumber corr =
        mul(shift_valuation(rho, -static_cast<i64>(s)), invert_unit(denom));
    x = add(x, corr);
    if (x.is_zero() || x.leading_digit() != xi)
      throw Error(ErrorCode::VerificationFailed,
                  "iterate left the ball B_1(xi)");
  }
  throw Error(ErrorCode::VerificationFailed,
              "seed iteration failed to clear the o[k^2] bar");
}

PadicNumber digit_lift(const PerturbedMonomial& F, const LiftWitness& seed,
                       std::int32_t N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N >= 1 required");
  Prime p = F.prime();
  auto [k, m, s] = residue::decompose_k(F.k(), p);
  const std::int32_t si = static_cast<std::int32_t>(s);

  if (F.perturbation() &&
      F.perturbation()->lipschitz_exponent() > si)
    throw Error(ErrorCode::LipschitzTooLoose,
                "perturbation Lipschitz exponent exceeds s");
  if (!F.epsilon().is_exact_zero() &&
      F.epsilon().valuation_lower_bound() < 2 * static_cast<i64>(s) + 1)
    throw Error(ErrorCode::EpsilonTooLarge, "|eps|_p >= |k^2|_p");
  if (F.target().is_zero() || F.target().valuation() != 0)
    throw Error(ErrorCode::NotAUnit, "digit_lift needs a unit target");
  if (F.target().abs_precision() < static_cast<i64>(N) + s)
    throw Error(ErrorCode::InsufficientPrecision,
                "target must be known mod p^{N+s}");

  const PadicNumber& x0 = seed.seed;
  if (x0.is_zero() || !x0.is_unit())
    throw Error(ErrorCode::InvalidArgument, "seed must be a unit");
  if (x0.abs_precision() < static_cast<i64>(s) + 2)
    throw Error(ErrorCode::InsufficientPrecision,
                "seed known to fewer than s+2 digits");

  const std::int32_t W = PrecisionBudget::for_solver(N, si).working();
  // digits of the seed beyond position s+1 are scratch: every later
  // position is owned by some alpha_n correction, so zero-extension is a
  // legitimate exact representative
  PadicNumber x = pad_exact(truncate_abs(x0, W), W);
  const std::uint64_t xi = x.leading_digit();

  PadicNumber rho = F.eval(x);
  if (lb(rho) < 2 * static_cast<i64>(s) + 1)
    throw Error(ErrorCode::SeedTooCoarse,
                "seed residual misses the o[p^{2s}] bar");

  // alpha_n = -(digit of F at p^{2s+n}) / (m x_0^{k-1}) mod p; the
  // divisor is a unit, so every step has exactly one solution
  const std::uint64_t coef =
      mulmod_u64(m % p.value(),
                 powmod_u64(xi, k - 1, p.value()), p.value());
  const std::uint64_t coef_inv = invmod_u64(coef, p.value());

  const std::int32_t steps = std::max(0, N - si - 1);
  for (std::int32_t n = 1; n <= steps; ++n) {
    const i64 e = 2 * static_cast<i64>(s) + n;
    std::uint64_t phi = rho.digit_at(e);
    if (phi != 0) {
      std::uint64_t alpha =
          mulmod_u64(p.value() - phi, coef_inv, p.value());
      x = add(x, exact_term(p, alpha, static_cast<i64>(s) + n, W));
      rho = F.eval(x);
    }
    if (lb(rho) < e + 1)
      throw Error(ErrorCode::StalledStep,
                  "digit step failed to certify o[p^{2s+n}]");
    if (x.leading_digit() != xi)
      throw Error(ErrorCode::VerificationFailed,
                  "iterate left the ball B_1(xi)");
  }

  PadicNumber out = truncate_abs(x, N);
  if (lb(F.eval(out)) < N)
    throw Error(ErrorCode::VerificationFailed,
                "lifted root failed its residual check at precision N");
  return out;
}

}  // namespace padic::hensel
