#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/lipschitz.hpp"
#include "padic/number.hpp"
#include "padic/polynomial.hpp"
#include "padic/residue.hpp"

namespace padic::solve {

enum class Verdict { Solvable, NoSolution };

enum class NoSolutionReason {
  None,
  NormNotKthPower,   // k does not divide v_p(a)
  EmptySolP,         // a_0 is not a k-th power residue mod p
  ConditionIIFailed, // a != a_0^{p^s} + o[p^s]
};

const char* to_string(Verdict v);
const char* to_string(NoSolutionReason r);

struct RootEntry {
  std::uint64_t xi;  // residue class mod p the root lives in
  PadicNumber root;
};

/// Full solvability answer. NoSolution is a successful report with a
/// machine-readable reason; errors are reserved for violated hypotheses.
struct SolutionReport {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::string problem;  // echo of the instance
  Verdict verdict = Verdict::NoSolution;
  NoSolutionReason reason = NoSolutionReason::None;
  std::uint64_t kappa_p = 0;
  std::vector<RootEntry> roots;  // sorted by xi ascending

  bool solvable() const noexcept { return verdict == Verdict::Solvable; }
};

struct SolvabilityCheck {
  Verdict verdict;
  NoSolutionReason reason;
  std::uint64_t kappa_p;
  residue::ResidueAnalysis analysis;  // of the unit part (valid when scanned)
};

/// The solvability criterion for x^k = a over Q_p:
///   NormNotKthPower unless k | v_p(a); then on the unit part a*,
///   EmptySolP unless Sol_p(x^k - a*) is nonempty; then
///   ConditionIIFailed unless a* = a_0^{p^s} + o[p^s]; else Solvable.
SolvabilityCheck check_solvability(std::uint64_t k, const PadicNumber& a);

/// All roots of x^k = a in Q_p, one per residue in Sol_p, each root
/// verified against the equation at output precision before returning.
SolutionReport solve_monomial(std::uint64_t k, const PadicNumber& a,
                              std::int32_t N);

/// The unique k-th root in E_p of a in E_p with |a - 1|_p < |k|_p.
/// Outside that regime the equation has no solution at all (for a in E_p);
/// reported as NotPrincipalDomain.
PadicNumber principal_kth_root(const PadicNumber& a, std::uint64_t k,
                               std::int32_t N);

/// Roots of F(x) = x^k - a + eps f(x) over Z_p, a a unit,
/// |eps|_p < |k^2|_p, lambda <= s. Verdict structure mirrors the
/// unperturbed criterion; roots found by newton_seed on the
/// monomial part followed by digit_lift on the full F.
SolutionReport solve_perturbed(std::uint64_t k, const PadicNumber& a,
                               const PadicNumber& epsilon,
                               const LipschitzFunction& f, std::int32_t N);

/// Roots of a monic P(x) = x^k + a^(1) x^{k-1} + ... + a^(k), with
/// a^(k) a unit and max_{j<k} |a^(j)|_p < p^{-2s}: reduction to the
/// perturbed monomial with eps = p^t, t = min_{j<k} v_p(a^(j)).
/// P has no roots outside Z_p, so the report is complete for Q_p.
SolutionReport solve_polynomial(const Polynomial& P, std::int32_t N);

}  // namespace padic::solve
