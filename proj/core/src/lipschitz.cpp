#include "padic/lipschitz.hpp"

#include <random>

namespace padic {
namespace {

constexpr int kSpotCheckPairs = 12;
constexpr std::int32_t kSpotCheckDigits = 14;

PadicNumber random_zp(std::mt19937_64& rng, Prime p, std::int32_t digits) {
  std::vector<std::uint64_t> d(static_cast<std::size_t>(digits));
  for (auto& x : d) x = rng() % p.value();
  if (d[0] == 0) d[0] = 1 + rng() % (p.value() - 1);
  return PadicNumber::from_unit_digits(p, 0, std::move(d));
}

void spot_check(const LipschitzFunction::Evaluator& f, std::int32_t lambda,
                Prime p) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ p.value() ^
                      static_cast<std::uint64_t>(lambda + 64));
  for (int i = 0; i < kSpotCheckPairs; ++i) {
    PadicNumber x = random_zp(rng, p, kSpotCheckDigits);
    // y shares a prefix with x so the check exercises deep agreement too
    std::int64_t j = 1 + static_cast<std::int64_t>(rng() % 6);
    PadicNumber delta = shift_valuation(random_zp(rng, p, kSpotCheckDigits),
                                        j);
    PadicNumber y = add(x, delta);
    std::int64_t vxy = sub(x, y).valuation_lower_bound();
    std::int64_t need = vxy - lambda;
    PadicNumber dfx = sub(f(x), f(y));
    if (dfx.valuation_lower_bound() < need &&
        !dfx.is_apparent_zero())  // apparent zero already reports its bound
      throw Error(ErrorCode::LipschitzViolated,
                  "spot-check: |f(x)-f(y)|_p > p^lambda |x-y|_p");
  }
}

}  // namespace

LipschitzFunction::LipschitzFunction(Evaluator f,
                                     std::int32_t lipschitz_exponent,
                                     Prime p)
    : eval_(std::move(f)), lambda_(lipschitz_exponent), prime_(p) {
  spot_check(eval_, lambda_, prime_);
}

LipschitzFunction LipschitzFunction::from_polynomial(Polynomial poly) {
  for (const auto& c : poly.coefficients())
    if (!c.is_zero() && c.valuation() < 0)
      throw Error(ErrorCode::InvalidArgument,
                  "perturbation coefficients must lie in Z_p");
  Prime p = poly.prime();
  auto shared = std::make_shared<Polynomial>(std::move(poly));
  Evaluator f = [shared](const PadicNumber& x) { return shared->eval(x); };
  return LipschitzFunction(std::move(f), 0, p, *shared);
}

PerturbedMonomial::PerturbedMonomial(std::uint64_t k, PadicNumber a)
    : k_(k), a_(std::move(a)), eps_(PadicNumber::zero(a_.prime())) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
}

PerturbedMonomial::PerturbedMonomial(std::uint64_t k, PadicNumber a,
                                     PadicNumber epsilon,
                                     LipschitzFunction f)
    : k_(k), a_(std::move(a)), eps_(std::move(epsilon)), f_(std::move(f)) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (eps_.prime() != a_.prime() || f_->prime() != a_.prime())
    throw Error(ErrorCode::PrimeMismatch, "mixed primes in F");
}

PadicNumber PerturbedMonomial::eval(const PadicNumber& x) const {
  PadicNumber r = sub(pow(x, k_), a_);
  if (!eps_.is_exact_zero() && f_) r = add(r, mul(eps_, (*f_)(x)));
  return r;
}

}  // namespace padic
