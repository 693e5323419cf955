#include "padic/oracle.hpp"

#include <algorithm>

#include "padic/residue.hpp"

namespace padic::oracle {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 pow_with_budget(u64 p, std::int32_t M, u64 budget) {
  u64 r = 1;
  for (std::int32_t i = 0; i < M; ++i) {
    if (r > budget / p)
      throw Error(ErrorCode::BudgetExceeded,
                  "p^M exceeds the documented scan budget");
    r *= p;
  }
  return r;
}

std::int32_t vp_u64(u64 x, u64 p) {
  std::int32_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

u64 reduce_mod(long long x, u64 m) {
  long long r = x % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<u64>(r);
}

// Horner; moduli here stay <= 1e8 so plain 64-bit products suffice.
u64 eval_poly(const std::vector<u64>& coeffs, u64 x, u64 m) {
  u64 acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = (acc * x + coeffs[i]) % m;
  return acc;
}

}  // namespace

OracleCount brute_force_count(const IntPolynomial& F, Prime p,
                              std::uint64_t k, std::int32_t M) {
  if (F.empty())
    throw Error(ErrorCode::InvalidArgument, "empty polynomial");
  auto [kk, m, s] = residue::decompose_k(k, p);
  if (M < 2 * static_cast<std::int32_t>(s) + 2)
    throw Error(ErrorCode::InvalidArgument, "M >= 2s+2 required");
  const u64 pM = pow_with_budget(p.value(), M, kScanBudget);
  u64 cls_mod = pM;
  for (std::uint32_t i = 0; i < s; ++i) cls_mod /= p.value();

  std::vector<u64> coeffs(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) coeffs[i] = reduce_mod(F[i], pM);

  std::vector<u64> classes;
  for (u64 x = 1; x < pM; ++x) {
    if (x % p.value() == 0) continue;
    if (eval_poly(coeffs, x, pM) == 0) classes.push_back(x % cls_mod);
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  OracleCount out;
  out.modulus_exponent = M;
  out.class_exponent = M - static_cast<std::int32_t>(s);
  out.count = classes.size();
  out.representatives = std::move(classes);
  return out;
}

std::uint64_t to_integer_mod(const PadicNumber& r, std::int32_t e) {
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "e >= 1 required");
  if (!r.is_zero() && r.valuation() < 0)
    throw Error(ErrorCode::InvalidArgument, "value not in Z_p");
  if (r.abs_precision() < e)
    throw Error(ErrorCode::InsufficientPrecision,
                "value known to fewer than e digits");
  const u64 p = r.prime().value();
  const u64 pe = pow_with_budget(p, e, u64{1} << 62);
  if (r.is_zero()) return 0;
  u64 acc = 0;
  u64 scale = 1;
  for (std::int64_t i = 0; i < r.valuation(); ++i)
    scale = static_cast<u64>((static_cast<u128>(scale) * p) % pe);
  const auto& d = r.unit_digits();
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::int64_t exp = r.valuation() + static_cast<std::int64_t>(i);
    if (exp >= e) break;
    acc = static_cast<u64>(
        (acc + static_cast<u128>(d[i]) % pe * scale) % pe);
    scale = static_cast<u64>((static_cast<u128>(scale) * p) % pe);
  }
  return acc;
}

bool verify_root(const IntPolynomial& F, const PadicNumber& r,
                 std::int32_t e) {
  if (F.empty())
    throw Error(ErrorCode::InvalidArgument, "empty polynomial");
  const u64 p = r.prime().value();
  const u64 pe = pow_with_budget(p, e, u64{1} << 62);
  const u64 R = to_integer_mod(r, e);
  u64 acc = 0;
  for (std::size_t i = F.size(); i-- > 0;) {
    acc = mulmod_u64(acc, R, pe);
    u64 c = reduce_mod(F[i], pe);
    acc = static_cast<u64>((static_cast<u128>(acc) + c) % pe);
  }
  return acc == 0;
}

OracleCount brute_force_fixed_points(long long b, long long c, long long d,
                                     std::uint64_t k, Prime p,
                                     std::int32_t M) {
  auto [kk, m, s] = residue::decompose_k(k, p);
  if (M < 2 * static_cast<std::int32_t>(s) + 2)
    throw Error(ErrorCode::InvalidArgument, "M >= 2s+2 required");
  const u64 pM = pow_with_budget(p.value(), M, kScanBudget);
  const u64 P = p.value();
  const u64 bb = reduce_mod(b, pM), cc = reduce_mod(c, pM),
            dd = reduce_mod(d, pM);

  const u64 cm1 = (cc + pM - 1) % pM;
  if (cm1 == 0)
    throw Error(ErrorCode::InvalidArgument,
                "c ≡ 1 (mod p^M): no class resolution");
  const std::int32_t vc1 = vp_u64(cm1, P);
  if (vc1 >= M - 1)
    throw Error(ErrorCode::InvalidArgument,
                "M too small to resolve classes past v_p(c-1)");
  u64 cls_mod = pM;
  for (std::int32_t i = 0; i < vc1; ++i) cls_mod /= P;

  std::vector<u64> classes;
  for (u64 x = 1; x < pM; ++x) {
    if (x % P == 0) continue;
    const u64 den = (x + pM - dd) % pM;
    if (den == 0) continue;  // pole candidate; true fixed points never
    const u64 num = (bb * x + pM - cc) % pM;
    if (x % P != 1) {
      // divided check at mod-p resolution (denominator is a unit here);
      // the Proposition says none can pass, and the scan confirms it
      const u64 q1 = mulmod_u64(num % P, invmod_u64(den % P, P), P);
      if (powmod_u64(q1, k, P) != x % P) continue;
    }
    const std::int32_t v = vp_u64(den, P);
    const std::int32_t vn = num == 0 ? M : vp_u64(num, P);
    if (vn != v) continue;  // |f(x)|_p != 1, cannot equal a unit
    u64 res_mod = pM;
    for (std::int32_t i = 0; i < v; ++i) res_mod /= P;
    u64 dv = den, nv = num;
    for (std::int32_t i = 0; i < v; ++i) {
      dv /= P;
      nv /= P;
    }
    const u64 q = mulmod_u64(nv % res_mod, invmod_u64(dv % res_mod, res_mod),
                             res_mod);
    if (powmod_u64(q, k, res_mod) == x % res_mod)
      classes.push_back(x % cls_mod);
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  OracleCount out;
  out.modulus_exponent = M;
  out.class_exponent = M - vc1;
  out.count = classes.size();
  out.representatives = std::move(classes);
  return out;
}

}  // namespace padic::oracle
