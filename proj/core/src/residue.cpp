#include "padic/residue.hpp"

#include <numeric>

namespace padic::residue {

namespace {
constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 24;
}

KDecomposition decompose_k(std::uint64_t k, Prime p) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  std::uint64_t m = k;
  std::uint32_t s = 0;
  while (m % p.value() == 0) {
    m /= p.value();
    ++s;
  }
  return {k, m, s};
}

bool power_residue_test(long long b, std::uint64_t m, Prime p) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  long long br = b % static_cast<long long>(p.value());
  if (br < 0) br += static_cast<long long>(p.value());
  std::uint64_t bu = static_cast<std::uint64_t>(br);
  if (bu == 0)
    throw Error(ErrorCode::NotCoprime, "b must be coprime to p");
  std::uint64_t d = std::gcd(m, p.value() - 1);
  return powmod_u64(bu, (p.value() - 1) / d, p.value()) == 1;
}

ResidueAnalysis sol_p_digit(std::uint64_t k, std::uint64_t a0, Prime p) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (a0 == 0 || a0 >= p.value())
    throw Error(ErrorCode::InvalidArgument, "a0 must lie in 1..p-1");
  if (p.value() >= kScanLimit)
    throw Error(ErrorCode::BudgetExceeded,
                "sol_p scan limited to p < 2^24");
  ResidueAnalysis r{p.value(), k, a0, {}, 0};
  for (std::uint64_t xi = 1; xi < p.value(); ++xi)
    if (powmod_u64(xi, k, p.value()) == a0) r.sol_set.push_back(xi);
  r.kappa_p = r.sol_set.size();

  // cross-checks against the Euler criterion and the gcd count
  auto [kk, m, s] = decompose_k(k, p);
  bool euler = power_residue_test(static_cast<long long>(a0), m, p);
  if (euler != !r.sol_set.empty())
    throw Error(ErrorCode::VerificationFailed,
                "sol_p scan disagrees with the Euler criterion");
  if (!r.sol_set.empty() &&
      r.kappa_p != std::gcd(k, p.value() - 1))
    throw Error(ErrorCode::VerificationFailed,
                "kappa_p != gcd(k, p-1) on a nonempty Sol_p");
  return r;
}

ResidueAnalysis sol_p(std::uint64_t k, const PadicNumber& a, Prime p) {
  if (a.prime() != p)
    throw Error(ErrorCode::PrimeMismatch, "a is over a different prime");
  if (a.is_zero() || a.valuation() != 0)
    throw Error(ErrorCode::NotAUnit, "sol_p needs a unit (valuation 0)");
  return sol_p_digit(k, a.leading_digit(), p);
}

}  // namespace padic::residue
