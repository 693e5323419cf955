#include "padic/polynomial.hpp"

namespace padic {

PadicNumber scale_by_integer(const PadicNumber& x, long long c) {
  if (x.is_exact_zero() || c == 0)
    return PadicNumber::zero(x.prime());
  // an exact small integer: give it enough digits that the product's
  // precision is capped by x, not by the scalar
  std::int32_t n = x.is_apparent_zero()
                       ? 2
                       : x.rel_precision() + 2;
  return mul(x, PadicNumber::from_integer(c, x.prime(), n));
}

Polynomial::Polynomial(Prime p, std::vector<PadicNumber> ascending_coeffs)
    : prime_(p), coeffs_(std::move(ascending_coeffs)) {
  if (coeffs_.empty())
    throw Error(ErrorCode::InvalidArgument, "polynomial needs coefficients");
  for (const auto& c : coeffs_)
    if (c.prime() != p)
      throw Error(ErrorCode::PrimeMismatch, "coefficient over wrong prime");
}

Polynomial Polynomial::from_integers(Prime p,
                                     const std::vector<long long>& ascending,
                                     std::int32_t digits) {
  std::vector<PadicNumber> cs;
  cs.reserve(ascending.size());
  for (long long c : ascending)
    cs.push_back(PadicNumber::from_integer(c, p, digits));
  return Polynomial(p, std::move(cs));
}

PadicNumber Polynomial::eval(const PadicNumber& x) const {
  PadicNumber acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;)
    acc = add(mul(acc, x), coeffs_[i]);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) {
    return Polynomial(prime_, {PadicNumber::zero(prime_)});
  }
  std::vector<PadicNumber> ds;
  ds.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    ds.push_back(scale_by_integer(coeffs_[i], static_cast<long long>(i)));
  return Polynomial(prime_, std::move(ds));
}

bool Polynomial::is_monic() const {
  const PadicNumber& lead = coeffs_.back();
  return !lead.is_zero() && lead.valuation() == 0 &&
         lead.leading_digit() == 1 &&
         sub(lead, PadicNumber::from_integer(1, prime_,
                                             lead.rel_precision()))
                 .valuation_lower_bound() >= lead.abs_precision();
}

}  // namespace padic
