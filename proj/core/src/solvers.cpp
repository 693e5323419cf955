#include "padic/solvers.hpp"

#include <algorithm>

#include "padic/budget.hpp"
#include "padic/hensel.hpp"
#include "padic/textio.hpp"

namespace padic::solve {

const char* to_string(Verdict v) {
  return v == Verdict::Solvable ? "Solvable" : "NoSolution";
}

const char* to_string(NoSolutionReason r) {
  switch (r) {
    case NoSolutionReason::None: return "None";
    case NoSolutionReason::NormNotKthPower: return "NormNotKthPower";
    case NoSolutionReason::EmptySolP: return "EmptySolP";
    case NoSolutionReason::ConditionIIFailed: return "ConditionIIFailed";
  }
  return "?";
}

namespace {

using i64 = std::int64_t;

PadicNumber condition_ii_target(const PadicNumber& unit, Prime p,
                                std::uint32_t s) {
  std::uint64_t ps = 1;
  for (std::uint32_t j = 0; j < s; ++j) ps *= p.value();
  return pow(PadicNumber::from_integer(
                 static_cast<long long>(unit.leading_digit()), p,
                 static_cast<std::int32_t>(s) + 2),
             ps);
}

}  // namespace

SolvabilityCheck check_solvability(std::uint64_t k, const PadicNumber& a) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (a.is_zero())
    throw Error(ErrorCode::InvalidArgument,
                "solvability is defined for nonzero a");
  Prime p = a.prime();
  auto [kk, m, s] = residue::decompose_k(k, p);

  SolvabilityCheck out{Verdict::NoSolution, NoSolutionReason::None, 0,
                       {p.value(), k, 0, {}, 0}};

  if (a.valuation() % static_cast<i64>(k) != 0) {
    out.reason = NoSolutionReason::NormNotKthPower;
    return out;
  }
  PadicNumber unit = unit_decompose(a).second;
  out.analysis = residue::sol_p(k, unit, p);
  if (out.analysis.empty()) {
    out.reason = NoSolutionReason::EmptySolP;
    return out;
  }
  if (unit.abs_precision() < static_cast<i64>(s) + 1)
    throw Error(ErrorCode::InsufficientPrecision,
                "a must be known mod p^{s+1} to decide condition II");
  if (!congruent_mod(unit, condition_ii_target(unit, p, s),
                     static_cast<i64>(s) + 1)) {
    out.reason = NoSolutionReason::ConditionIIFailed;
    return out;
  }
  out.verdict = Verdict::Solvable;
  out.kappa_p = out.analysis.kappa_p;
  return out;
}

namespace {

SolutionReport report_header(std::uint64_t k, const PadicNumber& a) {
  SolutionReport r;
  r.p = a.prime().value();
  r.k = k;
  r.problem = "x^" + std::to_string(k) + " = " + format_padic(a);
  return r;
}

// one root per residue class, unit target, shared by all solver routes
std::vector<RootEntry> lift_all(const PerturbedMonomial& F,
                                const residue::ResidueAnalysis& analysis,
                                std::int32_t N) {
  std::vector<RootEntry> roots;
  roots.reserve(analysis.sol_set.size());
  for (std::uint64_t xi : analysis.sol_set) {
    hensel::LiftWitness w = hensel::newton_seed(F.target(), F.k(), xi);
    roots.push_back({xi, hensel::digit_lift(F, w, N)});
  }
  return roots;
}

}  // namespace

SolutionReport solve_monomial(std::uint64_t k, const PadicNumber& a,
                              std::int32_t N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N >= 1 required");
  SolutionReport report = report_header(k, a);
  SolvabilityCheck chk = check_solvability(k, a);
  report.verdict = chk.verdict;
  report.reason = chk.reason;
  report.kappa_p = chk.kappa_p;
  if (!report.solvable()) return report;

  Prime p = a.prime();
  auto [kk, m, s] = residue::decompose_k(k, p);
  auto [val, unit] = unit_decompose(a);
  const i64 l = val / static_cast<i64>(k);

  if (k == 1) {
    // degenerate but valid: the equation echoes a
    report.roots.push_back({unit.leading_digit(), truncate_abs(a, val + N)});
    return report;
  }

  if (unit.abs_precision() < static_cast<i64>(N) + s)
    throw Error(ErrorCode::InsufficientPrecision,
                "a must be known mod p^{v_p(a) + N + s}");

  PerturbedMonomial F(k, unit);
  for (auto& [xi, unit_root] : lift_all(F, chk.analysis, N)) {
    PadicNumber root = shift_valuation(unit_root, l);
    if (sub(pow(root, k), a).valuation_lower_bound() < val + N)
      throw Error(ErrorCode::VerificationFailed,
                  "root failed verification against x^k = a");
    report.roots.push_back({xi, std::move(root)});
  }
  return report;
}

PadicNumber principal_kth_root(const PadicNumber& a, std::uint64_t k,
                               std::int32_t N) {
  if (!in_ep(a))
    throw Error(ErrorCode::NotPrincipalDomain, "a is not in E_p");
  Prime p = a.prime();
  auto [kk, m, s] = residue::decompose_k(k, p);
  // outside the principal regime the equation has no solution at all
  PadicNumber am1 = sub(a, PadicNumber::from_integer(1, p,
                                                     a.rel_precision()));
  if (am1.valuation_lower_bound() < static_cast<i64>(s) + 1)
    throw Error(ErrorCode::NotPrincipalDomain,
                "|a-1|_p >= |k|_p: the equation has no solution");
  if (k == 1) return truncate_abs(a, N);
  SolutionReport rep = solve_monomial(k, a, N);
  if (!rep.solvable())
    throw Error(ErrorCode::VerificationFailed,
                "principal-root regime must be solvable");
  for (auto& e : rep.roots)
    if (e.xi == 1) return e.root;
  throw Error(ErrorCode::VerificationFailed,
              "no root attached to xi = 1");
}

SolutionReport solve_perturbed(std::uint64_t k, const PadicNumber& a,
                               const PadicNumber& epsilon,
                               const LipschitzFunction& f, std::int32_t N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N >= 1 required");
  Prime p = a.prime();
  if (a.is_zero() || a.valuation() != 0)
    throw Error(ErrorCode::NotAUnit, "perturbed solver needs a unit a");
  auto [kk, m, s] = residue::decompose_k(k, p);
  if (!epsilon.is_exact_zero() &&
      epsilon.valuation_lower_bound() < 2 * static_cast<i64>(s) + 1)
    throw Error(ErrorCode::EpsilonTooLarge, "|eps|_p >= |k^2|_p");
  if (f.lipschitz_exponent() > static_cast<std::int32_t>(s))
    throw Error(ErrorCode::LipschitzTooLoose,
                "Lipschitz exponent exceeds s");

  SolutionReport report = report_header(k, a);
  report.problem = "x^" + std::to_string(k) + " - (" + format_padic(a) +
                   ") + (" + format_padic(epsilon) + ")*f(x)";
  SolvabilityCheck chk = check_solvability(k, a);
  report.verdict = chk.verdict;
  report.reason = chk.reason;
  report.kappa_p = chk.kappa_p;
  if (!report.solvable()) return report;

  if (a.abs_precision() < static_cast<i64>(N) + s)
    throw Error(ErrorCode::InsufficientPrecision,
                "a must be known mod p^{N+s}");

  PerturbedMonomial F(k, a, epsilon, f);
  for (auto& entry : lift_all(F, chk.analysis, N)) {
    if (F.eval(entry.root).valuation_lower_bound() < N)
      throw Error(ErrorCode::VerificationFailed,
                  "root failed verification against F");
    report.roots.push_back(std::move(entry));
  }
  return report;
}

SolutionReport solve_polynomial(const Polynomial& P, std::int32_t N) {
  Prime p = P.prime();
  const std::size_t k = P.degree();
  if (k == 0)
    throw Error(ErrorCode::InvalidArgument, "constant polynomial");
  if (!P.is_monic())
    throw Error(ErrorCode::NonMonic, "leading coefficient must be 1");
  auto [kk, m, s] = residue::decompose_k(k, p);

  const PadicNumber& constant = P.coefficient(0);  // a^{(k)}
  if (constant.is_zero() || constant.valuation() != 0)
    throw Error(ErrorCode::HypothesisViolated,
                "ConstantNotUnit: a^(k) must be a unit");

  // middle coefficients a^{(j)}, j < k, live at x^{k-j}, i.e. indices 1..k-1
  i64 t = PadicNumber::kInfinity;
  for (std::size_t idx = 1; idx < k; ++idx) {
    const PadicNumber& c = P.coefficient(idx);
    if (c.is_exact_zero()) continue;
    if (c.is_apparent_zero()) {
      t = std::min(t, c.abs_precision());
      continue;
    }
    t = std::min(t, c.valuation());
  }
  if (t < 2 * static_cast<i64>(s) + 1)
    throw Error(ErrorCode::HypothesisViolated,
                "MiddleCoefficientsTooLarge: max |a^(j)|_p >= p^{-2s}");
  for (std::size_t idx = 1; idx < k; ++idx) {
    const PadicNumber& c = P.coefficient(idx);
    if (!c.is_exact_zero() &&
        c.abs_precision() < static_cast<i64>(N) + s + 1)
      throw Error(ErrorCode::InsufficientPrecision,
                  "middle coefficients must be known mod p^{N+s+1}");
  }

  PadicNumber a = negate(constant);
  SolutionReport report;

  if (t == PadicNumber::kInfinity) {
    // pure monomial x^k + a^(k)
    report = solve_monomial(k, a, N);
  } else {
    // eps = p^t, f = sum (a^{(j)} / p^t) x^{k-j}: coefficients in Z_p
    std::vector<PadicNumber> fc;
    fc.push_back(PadicNumber::zero(p));
    for (std::size_t idx = 1; idx < k; ++idx)
      fc.push_back(shift_valuation(P.coefficient(idx), -t));
    LipschitzFunction f =
        LipschitzFunction::from_polynomial(Polynomial(p, std::move(fc)));
    PadicNumber eps = PadicNumber::from_unit_digits(p, t, {1});
    eps = pad_exact(eps, N + 2 * static_cast<std::int32_t>(s) + 6);
    report = solve_perturbed(k, a, eps, f, N);
  }

  std::string poly_echo = "P(x), deg " + std::to_string(k);
  report.problem = poly_echo;
  return report;
}

}  // namespace padic::solve
