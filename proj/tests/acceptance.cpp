// Acceptance suite: every criterion runs at its stated tolerance and
// prints one PASS/FAIL line. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "padic/fixed_point.hpp"
#include "padic/hensel.hpp"
#include "padic/oracle.hpp"
#include "padic/residue.hpp"
#include "padic/solvers.hpp"

using namespace padic;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

PadicNumber random_unit(std::mt19937_64& rng, Prime p, std::int32_t n) {
  std::vector<std::uint64_t> d(static_cast<std::size_t>(n));
  for (auto& x : d) x = rng() % p.value();
  d[0] = 1 + rng() % (p.value() - 1);
  return PadicNumber::from_unit_digits(p, 0, std::move(d));
}

oracle::IntPolynomial monomial_int_poly(std::uint64_t k, long long a) {
  oracle::IntPolynomial F(static_cast<std::size_t>(k) + 1, 0);
  F[0] = -a;
  F[static_cast<std::size_t>(k)] = 1;
  return F;
}

std::uint64_t pow_u64(std::uint64_t p, std::int32_t e) {
  std::uint64_t r = 1;
  for (std::int32_t i = 0; i < e; ++i) r *= p;
  return r;
}

std::uint64_t reduce_ll(long long x, std::uint64_t m) {
  long long r = x % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<std::uint64_t>(r);
}

// Criteria 1, 2 and 4 share the instance suite: p in {3,5,7,11,13},
// k in 1..12, 200 random units a mod p^8 per (p,k).
void criteria_1_2_4() {
  const std::uint64_t primes[] = {3, 5, 7, 11, 13};
  bool count_law_ok = true, digits_ok = true, perturb_ok = true;
  std::string c1_detail, c2_detail, c4_detail;
  long instances = 0, solvable_count = 0;

  for (std::uint64_t pv : primes) {
    Prime p(pv);
    for (std::uint64_t k = 1; k <= 12; ++k) {
      auto dec = residue::decompose_k(k, p);
      const std::int32_t s = static_cast<std::int32_t>(dec.s);
      const std::int32_t M = 2 * s + 4;
      const std::uint64_t p8 = pow_u64(pv, 8);
      std::mt19937_64 rng(0xACCE97ull * pv + k);
      for (int t = 0; t < 200; ++t) {
        long long a;
        do {
          a = 1 + static_cast<long long>(rng() % (p8 - 1));
        } while (a % static_cast<long long>(pv) == 0);
        ++instances;

        PadicNumber av = PadicNumber::from_integer(a, p, 20);
        solve::SolutionReport rep = solve::solve_monomial(k, av, 10);
        oracle::OracleCount cnt =
            oracle::brute_force_count(monomial_int_poly(k, a), p, k, M);

        const std::uint64_t solver_count =
            rep.solvable() ? rep.kappa_p : 0;
        if (solver_count != cnt.count ||
            rep.roots.size() != solver_count) {
          count_law_ok = false;
          if (c1_detail.empty())
            c1_detail = "mismatch at p=" + std::to_string(pv) +
                        " k=" + std::to_string(k) + " a=" + std::to_string(a);
        }

        if (rep.solvable()) {
          ++solvable_count;
          // criterion 2: digit-for-digit match with an oracle class rep
          for (const auto& e : rep.roots) {
            std::uint64_t trunc =
                oracle::to_integer_mod(e.root, M - s);
            bool found = false;
            for (auto r : cnt.representatives)
              if (r == trunc) found = true;
            if (!found) {
              digits_ok = false;
              if (c2_detail.empty())
                c2_detail = "root not among representatives at p=" +
                            std::to_string(pv) + " k=" + std::to_string(k) +
                            " a=" + std::to_string(a);
            }
          }

          // criterion 4: random Z_p polynomial perturbation,
          // v_p(eps) >= 2s+1
          long long epsu = 1 + static_cast<long long>(rng() % (pv - 1));
          long long eps_int =
              epsu * static_cast<long long>(pow_u64(pv, 2 * s + 1));
          std::vector<long long> fc(1 + rng() % 4);
          for (auto& c : fc)
            c = static_cast<long long>(rng() % (pv * pv));
          PadicNumber eps = PadicNumber::from_integer(eps_int, p, 24);
          LipschitzFunction f = LipschitzFunction::from_polynomial(
              Polynomial::from_integers(p, fc, 24));
          PadicNumber av16 = PadicNumber::from_integer(a, p, 24);
          solve::SolutionReport prep =
              solve::solve_perturbed(k, av16, eps, f, 16);

          oracle::IntPolynomial F(
              std::max<std::size_t>(static_cast<std::size_t>(k),
                                    fc.size() - 1) +
                  1,
              0);
          F[0] = -a;
          for (std::size_t i = 0; i < fc.size(); ++i)
            F[i] += eps_int * fc[i];
          F[static_cast<std::size_t>(k)] += 1;

          bool this_ok = prep.solvable() && prep.kappa_p == rep.kappa_p &&
                         prep.roots.size() == rep.roots.size();
          if (this_ok) {
            std::set<std::uint64_t> xis;
            for (const auto& e : rep.roots) xis.insert(e.xi);
            for (const auto& e : prep.roots) {
              if (!oracle::verify_root(F, e.root, 16)) this_ok = false;
              if (xis.count(e.root.leading_digit()) == 0) this_ok = false;
            }
          }
          if (!this_ok) {
            perturb_ok = false;
            if (c4_detail.empty())
              c4_detail = "perturbed failure at p=" + std::to_string(pv) +
                          " k=" + std::to_string(k) + " a=" + std::to_string(a);
          }
        }
      }
    }
  }

  report(1, "root-count law (solver vs oracle, exact)", count_law_ok,
         count_law_ok ? std::to_string(instances) + " instances" : c1_detail);
  report(2, "digit exactness mod p^{M-s}", digits_ok,
         digits_ok ? "all solvable roots matched" : c2_detail);
  report(4, "perturbation stability (|F(root)| <= p^-16)", perturb_ok,
         perturb_ok ? std::to_string(solvable_count) + " solvable instances"
                    : c4_detail);
}

void criterion_3() {
  const std::uint64_t primes[] = {3, 5, 7, 11, 13};
  std::mt19937_64 rng(0x9d2c5680);
  bool ok = true;
  std::string detail;
  for (int t = 0; t < 1000 && ok; ++t) {
    Prime p(primes[t % 5]);
    std::uint64_t k = 2 + rng() % 11;
    auto dec = residue::decompose_k(k, p);
    PadicNumber x = random_unit(rng, p, 20);
    std::int64_t j = 1 + static_cast<std::int64_t>(rng() % 6);
    PadicNumber y = add(x, shift_valuation(random_unit(rng, p, 20), j));
    PadicNumber diff = sub(pow(x, k), pow(y, k));
    if (diff.valuation() != static_cast<std::int64_t>(dec.s) + j) {
      ok = false;
      detail = "power-difference identity failed at p=" +
               std::to_string(p.value()) + " k=" + std::to_string(k);
    }
    PadicNumber x0 = PadicNumber::from_integer(
        static_cast<long long>(x.leading_digit()), p, 20);
    if (sub(pow(x, k), pow(x0, k)).valuation_lower_bound() <=
        static_cast<std::int64_t>(dec.s)) {
      ok = false;
      detail = "Fermat-type drop failed at p=" + std::to_string(p.value()) +
               " k=" + std::to_string(k);
    }
  }
  report(3, "power-difference identity, 1000 random instances", ok, detail);
}

void criterion_5() {
  Prime p5(5);
  bool ok = true;
  std::string detail;
  try {
    PadicNumber a = PadicNumber::from_integer(6, p5, 24);
    PadicNumber eps = PadicNumber::from_integer(5, p5, 24);
    LipschitzFunction f = LipschitzFunction::from_polynomial(
        Polynomial::from_integers(p5, {0, 1}, 24));
    solve::SolutionReport rep = solve::solve_perturbed(2, a, eps, f, 16);
    ok = rep.solvable() && rep.roots.size() == 2 &&
         rep.roots[0].root == PadicNumber::from_integer(1, p5, 16) &&
         rep.roots[1].root == PadicNumber::from_integer(-6, p5, 16);
    if (!ok) detail = "roots differ from 1 and -6 at 16 digits";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(5, "factorization sanity: x^2-6+5x = (x-1)(x+6) over Q_5", ok,
         detail);
}

void criterion_6() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(0x51f15eed);
  const std::uint64_t primes[] = {3, 5, 7};

  // 100 conforming instances
  for (int t = 0; t < 100 && ok; ++t) {
    Prime p(primes[t % 3]);
    std::uint64_t k = 2 + rng() % 8;
    auto dec = residue::decompose_k(k, p);
    const std::int32_t s = static_cast<std::int32_t>(dec.s);
    long long p6 = static_cast<long long>(pow_u64(p.value(), 6));
    long long ak;
    do {
      ak = 1 + static_cast<long long>(rng() % (p6 - 1));
    } while (ak % static_cast<long long>(p.value()) == 0);
    std::vector<long long> coeffs(static_cast<std::size_t>(k) + 1, 0);
    coeffs[0] = ak;
    long long scale = static_cast<long long>(pow_u64(p.value(), 2 * s + 1));
    for (std::size_t j = 1; j < k; ++j)
      coeffs[j] = scale * static_cast<long long>(
                              rng() % (p.value() * p.value()));
    coeffs[static_cast<std::size_t>(k)] = 1;

    solve::SolutionReport rep = solve::solve_polynomial(
        Polynomial::from_integers(p, coeffs, 16 + 2 * s + 10), 16);
    oracle::OracleCount cnt =
        oracle::brute_force_count(coeffs, p, k, 2 * s + 4);
    std::uint64_t got = rep.solvable() ? rep.kappa_p : 0;
    if (got != cnt.count || (rep.solvable() &&
                             rep.roots.size() != rep.kappa_p)) {
      ok = false;
      detail = "conforming count mismatch at p=" + std::to_string(p.value()) +
               " k=" + std::to_string(k);
    }
    if (rep.solvable())
      for (const auto& e : rep.roots)
        if (!oracle::verify_root(coeffs, e.root, 16)) {
          ok = false;
          detail = "|P(root)|_p > p^-16 at p=" + std::to_string(p.value());
        }
  }

  // 100 instances violating condition II (requires s >= 1)
  const std::pair<std::uint64_t, std::uint64_t> sp_cases[] = {
      {3, 3}, {3, 6}, {3, 9}, {5, 5}, {7, 7}};
  for (int t = 0; t < 100 && ok; ++t) {
    auto [pv, k] = sp_cases[t % 5];
    Prime p(pv);
    auto dec = residue::decompose_k(k, p);
    const std::int32_t s = static_cast<std::int32_t>(dec.s);
    const std::uint64_t mod = pow_u64(pv, 2 * s + 6);
    std::uint64_t x = 1 + rng() % (pv - 1);
    std::uint64_t atrue = powmod_u64(x, k, mod);
    std::int32_t j = 1 + static_cast<std::int32_t>(rng() % s);
    std::uint64_t u = 1 + rng() % (pv - 1);
    long long abad =
        static_cast<long long>((atrue + u * pow_u64(pv, j)) % mod);
    std::vector<long long> coeffs(static_cast<std::size_t>(k) + 1, 0);
    coeffs[0] = -abad;  // constant a^{(k)} = -a, target a = abad
    long long scale = static_cast<long long>(pow_u64(pv, 2 * s + 1));
    for (std::size_t jj = 1; jj < k; ++jj)
      coeffs[jj] = scale * static_cast<long long>(rng() % pv);
    coeffs[static_cast<std::size_t>(k)] = 1;

    solve::SolutionReport rep = solve::solve_polynomial(
        Polynomial::from_integers(p, coeffs, 16 + 2 * s + 10), 16);
    oracle::OracleCount cnt =
        oracle::brute_force_count(coeffs, p, k, 2 * s + 4);
    if (rep.solvable() || cnt.count != 0) {
      ok = false;
      detail = "condition-II-violating instance not refused at p=" +
               std::to_string(pv) + " k=" + std::to_string(k);
    }
  }
  report(6, "polynomial theorem (100 conforming + 100 violating)", ok,
         detail);
}

void criterion_7() {
  bool ok = true;
  std::string detail;
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {
      {5, 2}, {3, 3}, {7, 3}, {11, 2}};
  std::mt19937_64 rng(0xf1c5ed);

  for (auto [pv, k] : cases) {
    if (!ok) break;
    Prime p(pv);
    auto dec = residue::decompose_k(k, p);
    const std::int32_t s = static_cast<std::int32_t>(dec.s);
    const std::uint64_t kappa = std::gcd(k, pv - 1);

    // scan cost stays manageable when p^M <= 6e6
    auto fits_budget = [pv](std::int32_t M) {
      std::uint64_t r = 1;
      for (std::int32_t i = 0; i < M; ++i) {
        r *= pv;
        if (r > 6'000'000) return false;
      }
      return true;
    };

    for (int t = 0; t < 20 && ok; ++t) {
      // depths vary within the scan budget, including the boundary
      // |b-1| = |(c-1)^2| of the hypothesis chain
      std::int32_t vc1 = s + 1 + static_cast<std::int32_t>(rng() % 2);
      std::int32_t vb1 = 2 * vc1 + static_cast<std::int32_t>(rng() % 3);
      if (!fits_budget(vb1 + 2 * vc1 + s + 1)) vc1 = s + 1;
      while (vb1 > 2 * vc1 && !fits_budget(vb1 + 2 * vc1 + s + 1)) --vb1;
      const std::int32_t M = vb1 + 2 * vc1 + s + 1;
      // enough digits that the divided-congruence check below still
      // resolves 12 digits behind the denominator valuation; p^N must
      // stay inside the 64-bit integer-check window
      std::int32_t N = 12 + vb1 + s + 2;
      while (N > 12 + vb1 + s &&
             std::pow(static_cast<double>(pv), N) > 4.0e18)
        --N;

      long long uc = 1 + static_cast<long long>(rng() % (pv - 1));
      long long ub = 1 + static_cast<long long>(rng() % (pv - 1));
      long long c = 1 + uc * static_cast<long long>(pow_u64(pv, vc1));
      long long b = 1 + ub * static_cast<long long>(pow_u64(pv, vb1));
      long long d = 1 - b + c;

      solve::FixedPointProblem prob(
          PadicNumber::from_integer(b, p, N + vb1 + s + 10),
          PadicNumber::from_integer(c, p, N + vb1 + s + 10),
          PadicNumber::from_integer(d, p, N + vb1 + s + 10), k);
      solve::FixedPointReport rep = solve::fixed_points(prob, N);

      oracle::OracleCount cnt =
          oracle::brute_force_fixed_points(b, c, d, k, p, M);

      if (rep.points.size() != kappa + 1 || cnt.count != kappa + 1) {
        ok = false;
        detail = "count mismatch at p=" + std::to_string(pv) +
                 " k=" + std::to_string(k) + " b=" + std::to_string(b) +
                 " c=" + std::to_string(c);
        break;
      }
      // independent integer verification: |f(x) - x|_p <= p^-12 via the
      // divided congruence at each reported point, plus E_p membership
      const std::uint64_t pN = pow_u64(pv, N);
      for (const auto& x : rep.points) {
        if (!in_ep(x)) {
          ok = false;
          detail = "point outside E_p";
          break;
        }
        std::uint64_t X = oracle::to_integer_mod(x, N);
        std::uint64_t den = (X + pN - reduce_ll(d, pN)) % pN;
        std::uint64_t num =
            (mulmod_u64(reduce_ll(b, pN), X, pN) + pN - reduce_ll(c, pN)) %
            pN;
        std::int32_t v = 0;
        std::uint64_t dv = den;
        while (dv % pv == 0) {
          dv /= pv;
          ++v;
        }
        std::uint64_t res_mod = pN;
        for (std::int32_t i = 0; i < v; ++i) res_mod /= pv;
        std::uint64_t nv = num;
        for (std::int32_t i = 0; i < v; ++i) nv /= pv;
        std::uint64_t q =
            mulmod_u64(nv % res_mod, invmod_u64(dv % res_mod, res_mod),
                       res_mod);
        std::uint64_t fx = powmod_u64(q, k, res_mod);
        std::uint64_t p12 = pow_u64(pv, 12);
        if ((fx + res_mod - X % res_mod) % res_mod % p12 != 0) {
          ok = false;
          detail = "divided congruence fails at p^12";
          break;
        }
        // membership among oracle class representatives
        std::uint64_t cls = pow_u64(pv, cnt.class_exponent);
        std::uint64_t xr = X % std::min(cls, pN);
        bool found = false;
        for (auto r : cnt.representatives)
          if (r % std::min(cls, pN) == xr) found = true;
        if (!found) {
          ok = false;
          detail = "point not among oracle representatives";
          break;
        }
      }
    }
  }
  report(7, "fixed points: gcd(k,p-1)+1 of them, in E_p, oracle-matched",
         ok, detail);
}

void criterion_8() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(0xe116e5);
  const std::uint64_t primes[] = {3, 5, 7, 11};
  for (int t = 0; t < 200 && ok; ++t) {
    Prime p(primes[t % 4]);
    std::uint64_t k = 2 + rng() % 11;
    auto dec = residue::decompose_k(k, p);
    const std::int32_t s = static_cast<std::int32_t>(dec.s);
    PadicNumber x = random_unit(rng, p, 18 + 2 * s);
    PadicNumber a = pow(x, k);
    auto analysis = residue::sol_p(k, a, p);
    std::uint64_t xi = analysis.sol_set[rng() % analysis.sol_set.size()];

    hensel::LiftWitness w = hensel::newton_seed(a, k, xi);
    PadicNumber via_digit =
        hensel::digit_lift(PerturbedMonomial(k, a), w, 12);

    std::vector<PadicNumber> cs;
    cs.push_back(negate(a));
    for (std::uint64_t i = 1; i < k; ++i) cs.push_back(PadicNumber::zero(p));
    cs.push_back(PadicNumber::from_integer(1, p, 18 + 2 * s));
    PadicNumber via_newton =
        hensel::classical_hensel(Polynomial(p, std::move(cs)), w.seed, s, 12);

    if (!(via_digit == via_newton)) {
      ok = false;
      detail = "engines disagree at p=" + std::to_string(p.value()) +
               " k=" + std::to_string(k);
    }
  }
  report(8, "engine agreement: classical Hensel vs digit lift (200 runs)",
         ok, detail);
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  // p = 2 rejected everywhere
  try {
    Prime p2(2);
    ok = false;
    detail = "Prime(2) accepted";
  } catch (const Error&) {
  }
  if (ok) {
    Prime p3(3);
    auto rep = solve::solve_monomial(
        3, PadicNumber::from_integer(3, p3, 16), 6);
    if (rep.solvable() ||
        rep.reason != solve::NoSolutionReason::NormNotKthPower) {
      ok = false;
      detail = "k not dividing v_p(a) not reported as NormNotKthPower";
    }
  }
  if (ok) {
    // a in E_p with |k|_p <= |a-1|_p: refusal per the corollary
    Prime p3(3);
    PadicNumber a = PadicNumber::from_integer(4, p3, 16);
    auto rep = solve::solve_monomial(3, a, 6);
    bool refused = !rep.solvable() &&
                   rep.reason == solve::NoSolutionReason::ConditionIIFailed;
    bool principal_refused = false;
    try {
      solve::principal_kth_root(a, 3, 6);
    } catch (const Error& e) {
      principal_refused = e.code() == ErrorCode::NotPrincipalDomain;
    }
    if (!refused || !principal_refused) {
      ok = false;
      detail = "corollary-level refusal missing";
    }
  }
  report(9, "negative controls (p=2, norm, principal-root regime)", ok,
         detail);
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criteria_1_2_4();
  criterion_3();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::printf("%d criterion(s) failed; wall time %llds\n", g_failures,
              static_cast<long long>(secs));
  return g_failures == 0 ? 0 : 1;
}
