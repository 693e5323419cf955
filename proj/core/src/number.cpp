#include "padic/number.hpp"

#include <algorithm>
#include <limits>

namespace padic {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

constexpr std::size_t kMaxDigits = std::size_t{1} << 22;

void check_digit_budget(std::size_t n) {
  if (n > kMaxDigits)
    throw Error(ErrorCode::BudgetExceeded,
                "digit window exceeds " + std::to_string(kMaxDigits));
}

// a * b mod p^N, schoolbook with carry normalization per row.
std::vector<u64> mul_trunc(const std::vector<u64>& a,
                           const std::vector<u64>& b, std::size_t N, u64 p) {
  std::vector<u64> acc(N, 0);
  for (std::size_t i = 0; i < a.size() && i < N; ++i) {
    if (a[i] == 0) continue;
    u128 carry = 0;
    for (std::size_t j = 0; i + j < N; ++j) {
      u128 cur = acc[i + j] + carry;
      if (j < b.size()) cur += static_cast<u128>(a[i]) * b[j];
      acc[i + j] = static_cast<u64>(cur % p);
      carry = cur / p;
      if (carry == 0 && j >= b.size()) break;
    }
  }
  return acc;
}

// a - b mod p^N (wraps like base-p complement arithmetic).
std::vector<u64> sub_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                         std::size_t N, u64 p) {
  std::vector<u64> r(N, 0);
  u64 borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u64 av = i < a.size() ? a[i] : 0;
    u64 bv = i < b.size() ? b[i] : 0;
    u64 need = bv + borrow;
    if (av >= need) {
      r[i] = av - need;
      borrow = 0;
    } else {
      r[i] = av + (p - need);
      borrow = 1;
    }
  }
  return r;
}

// Unit inverse mod p^N by Newton doubling: y <- y (2 - a y).
std::vector<u64> inv_digits(const std::vector<u64>& a, std::size_t N, u64 p) {
  std::vector<u64> y{invmod_u64(a[0] % p, p)};
  std::size_t prec = 1;
  while (prec < N) {
    std::size_t np = std::min(2 * prec, N);
    std::vector<u64> t = mul_trunc(a, y, np, p);
    std::vector<u64> two{2 % p};  // p >= 3, single digit
    std::vector<u64> u = sub_mod(two, t, np, p);
    y = mul_trunc(y, u, np, p);
    prec = np;
  }
  return y;
}

// p-complement of a unit digit vector (negation of the unit part).
std::vector<u64> negate_digits(const std::vector<u64>& d, u64 p) {
  std::vector<u64> r(d.size());
  r[0] = p - d[0];  // d[0] != 0
  for (std::size_t i = 1; i < d.size(); ++i) r[i] = p - 1 - d[i];
  return r;
}

// |n| with v_p stripped, then expanded to `digits` base-p digits.
// Returns false for n == 0.
bool expand_magnitude(unsigned long long mag, u64 p, std::int32_t digits,
                      i64& val, std::vector<u64>& out) {
  if (mag == 0) return false;
  val = 0;
  while (mag % p == 0) {
    mag /= p;
    ++val;
  }
  out.assign(static_cast<std::size_t>(digits), 0);
  for (std::size_t i = 0; i < out.size() && mag != 0; ++i) {
    out[i] = mag % p;
    mag /= p;
  }
  return true;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::InvalidArgument, "valuation overflow");
  return r;
}

}  // namespace

PadicNumber PadicNumber::zero(Prime p) { return PadicNumber(p); }

PadicNumber PadicNumber::zero_mod(Prime p, i64 known_exp) {
  PadicNumber z(p);
  z.known_exp_ = known_exp;
  return z;
}

PadicNumber PadicNumber::from_integer(long long n, Prime p,
                                      std::int32_t digits) {
  if (digits < 1)
    throw Error(ErrorCode::InvalidArgument, "need at least one digit");
  check_digit_budget(static_cast<std::size_t>(digits));
  unsigned long long mag =
      n < 0 ? -static_cast<unsigned long long>(n)
            : static_cast<unsigned long long>(n);
  PadicNumber x(p);
  i64 val;
  std::vector<u64> d;
  if (!expand_magnitude(mag, p.value(), digits, val, d)) return x;
  if (n < 0) d = negate_digits(d, p.value());
  x.valuation_ = val;
  x.digits_ = std::move(d);
  x.known_exp_ = checked_add(val, digits);
  return x;
}

PadicNumber PadicNumber::from_rational(long long num, long long den, Prime p,
                                       std::int32_t digits) {
  if (den == 0)
    throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  if (digits < 1)
    throw Error(ErrorCode::InvalidArgument, "need at least one digit");
  check_digit_budget(static_cast<std::size_t>(digits));
  if (num == 0) return zero(p);
  unsigned long long nmag =
      num < 0 ? -static_cast<unsigned long long>(num)
              : static_cast<unsigned long long>(num);
  unsigned long long dmag =
      den < 0 ? -static_cast<unsigned long long>(den)
              : static_cast<unsigned long long>(den);
  i64 vn = 0, vd = 0;
  std::vector<u64> nd, dd;
  expand_magnitude(nmag, p.value(), digits, vn, nd);
  expand_magnitude(dmag, p.value(), digits, vd, dd);
  std::vector<u64> q =
      mul_trunc(nd, inv_digits(dd, static_cast<std::size_t>(digits),
                               p.value()),
                static_cast<std::size_t>(digits), p.value());
  if ((num < 0) != (den < 0)) q = negate_digits(q, p.value());
  PadicNumber x(p);
  x.valuation_ = vn - vd;
  x.digits_ = std::move(q);
  x.known_exp_ = checked_add(x.valuation_, digits);
  return x;
}

PadicNumber PadicNumber::from_unit_digits(Prime p, i64 valuation,
                                          std::vector<u64> digits) {
  if (digits.empty() || digits[0] == 0)
    throw Error(ErrorCode::InvalidArgument,
                "unit digits need a nonzero leading digit");
  for (u64 d : digits)
    if (d >= p.value())
      throw Error(ErrorCode::InvalidArgument, "digit out of range");
  check_digit_budget(digits.size());
  PadicNumber x(p);
  x.valuation_ = valuation;
  x.known_exp_ = checked_add(valuation, static_cast<i64>(digits.size()));
  x.digits_ = std::move(digits);
  return x;
}

i64 PadicNumber::valuation() const {
  if (is_exact_zero()) return kInfinity;
  if (is_apparent_zero())
    throw Error(ErrorCode::PrecisionExhausted,
                "value is indistinguishable from 0 (known only mod p^" +
                    std::to_string(known_exp_) + ")");
  return valuation_;
}

i64 PadicNumber::valuation_lower_bound() const noexcept {
  if (is_exact_zero()) return kInfinity;
  if (is_apparent_zero()) return known_exp_;
  return valuation_;
}

u64 PadicNumber::leading_digit() const {
  if (is_zero())
    throw Error(ErrorCode::InvalidArgument, "leading digit of zero");
  return digits_[0];
}

u64 PadicNumber::digit_at(i64 e) const {
  if (is_exact_zero()) return 0;
  if (e >= known_exp_)
    throw Error(ErrorCode::PrecisionExhausted,
                "digit at exponent " + std::to_string(e) +
                    " is beyond precision " + std::to_string(known_exp_));
  if (is_apparent_zero() || e < valuation_) return 0;
  return digits_[static_cast<std::size_t>(e - valuation_)];
}

bool operator==(const PadicNumber& a, const PadicNumber& b) {
  return a.prime_ == b.prime_ && a.valuation_ == b.valuation_ &&
         a.known_exp_ == b.known_exp_ && a.digits_ == b.digits_;
}

namespace {

void require_same_prime(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime())
    throw Error(ErrorCode::PrimeMismatch, "operands over different primes");
}

// Window [lo, lo+width) in exponent space; normalize to a PadicNumber.
PadicNumber from_window(Prime p, i64 lo, std::vector<u64> buf, i64 A) {
  std::size_t first = 0;
  while (first < buf.size() && buf[first] == 0) ++first;
  if (first == buf.size()) return PadicNumber::zero_mod(p, A);
  buf.erase(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(first));
  return PadicNumber::from_unit_digits(p, lo + static_cast<i64>(first),
                                       std::move(buf));
}

std::vector<u64> window_digits(const PadicNumber& x, i64 lo,
                               std::size_t width) {
  std::vector<u64> buf(width, 0);
  if (x.is_zero()) return buf;
  const auto& d = x.unit_digits();
  for (std::size_t i = 0; i < d.size(); ++i) {
    i64 e = x.valuation() + static_cast<i64>(i);
    if (e < lo) continue;
    if (e >= lo + static_cast<i64>(width)) break;
    buf[static_cast<std::size_t>(e - lo)] = d[i];
  }
  return buf;
}

std::vector<u64> add_carry(const std::vector<u64>& a,
                           const std::vector<u64>& b, u64 p) {
  std::vector<u64> r(a.size());
  u64 carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    u128 cur = static_cast<u128>(a[i]) + b[i] + carry;
    carry = cur >= p ? 1 : 0;
    r[i] = static_cast<u64>(carry ? cur - p : cur);
  }
  return r;
}

PadicNumber add_or_sub(const PadicNumber& x, const PadicNumber& y,
                       bool is_sub) {
  require_same_prime(x, y);
  Prime p = x.prime();
  if (x.is_exact_zero()) return is_sub ? negate(y) : y;
  if (y.is_exact_zero()) return x;
  i64 A = std::min(x.abs_precision(), y.abs_precision());
  if (x.is_apparent_zero() && y.is_apparent_zero())
    return PadicNumber::zero_mod(p, A);
  if (y.is_apparent_zero()) return truncate_abs(x, A);
  if (x.is_apparent_zero())
    return truncate_abs(is_sub ? negate(y) : y, A);
  i64 lo = std::min(x.valuation(), y.valuation());
  std::size_t width = static_cast<std::size_t>(A - lo);
  check_digit_budget(width);
  std::vector<u64> bx = window_digits(x, lo, width);
  std::vector<u64> by = window_digits(y, lo, width);
  std::vector<u64> buf = is_sub ? sub_mod(bx, by, width, p.value())
                                : add_carry(bx, by, p.value());
  return from_window(p, lo, std::move(buf), A);
}

}  // namespace

PadicNumber add(const PadicNumber& x, const PadicNumber& y) {
  return add_or_sub(x, y, false);
}

PadicNumber sub(const PadicNumber& x, const PadicNumber& y) {
  return add_or_sub(x, y, true);
}

PadicNumber negate(const PadicNumber& x) {
  if (x.is_zero()) return x;
  PadicNumber r(x.prime());
  r.valuation_ = x.valuation_;
  r.known_exp_ = x.known_exp_;
  r.digits_ = negate_digits(x.digits_, x.prime().value());
  return r;
}

PadicNumber mul(const PadicNumber& x, const PadicNumber& y) {
  require_same_prime(x, y);
  Prime p = x.prime();
  if (x.is_exact_zero() || y.is_exact_zero()) return PadicNumber::zero(p);
  if (x.is_zero() || y.is_zero()) {
    // apparent zero: only "v >= A" is known for that factor
    i64 ax = x.is_zero() ? x.abs_precision() : x.valuation();
    i64 ay = y.is_zero() ? y.abs_precision() : y.valuation();
    return PadicNumber::zero_mod(p, checked_add(ax, ay));
  }
  std::size_t N = std::min(x.digits_.size(), y.digits_.size());
  PadicNumber r(p);
  r.valuation_ = checked_add(x.valuation_, y.valuation_);
  r.digits_ = mul_trunc(x.digits_, y.digits_, N, p.value());
  // units multiply to a unit: d_0 e_0 != 0 mod p for prime p
  r.known_exp_ = checked_add(r.valuation_, static_cast<i64>(N));
  return r;
}

PadicNumber arith(const PadicNumber& x, const PadicNumber& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return add(x, y);
    case ArithOp::Sub: return sub(x, y);
    case ArithOp::Mul: return mul(x, y);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arith op");
}

PadicNumber invert_unit(const PadicNumber& x) {
  if (x.is_zero())
    throw Error(ErrorCode::ZeroInverse, "cannot invert (apparent) zero");
  PadicNumber r(x.prime());
  r.valuation_ = -x.valuation();
  r.digits_ = inv_digits(x.unit_digits(), x.unit_digits().size(),
                         x.prime().value());
  r.known_exp_ = checked_add(r.valuation_, static_cast<i64>(r.digits_.size()));
  return r;
}

PadicNumber div(const PadicNumber& x, const PadicNumber& y) {
  return mul(x, invert_unit(y));
}

PadicNumber pow(const PadicNumber& x, std::uint64_t k) {
  if (k == 0)
    throw Error(ErrorCode::InvalidArgument, "pow requires k >= 1");
  if (x.is_exact_zero()) return x;
  if (x.is_apparent_zero()) {
    i64 a = x.abs_precision();
    i64 ka;
    if (k > static_cast<std::uint64_t>(std::numeric_limits<i64>::max()) ||
        __builtin_mul_overflow(a, static_cast<i64>(k), &ka))
      throw Error(ErrorCode::InvalidArgument, "precision overflow in pow");
    return PadicNumber::zero_mod(x.prime(), ka);
  }
  PadicNumber base = x;
  PadicNumber acc = x;
  k -= 1;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return acc;
}

bool in_ep(const PadicNumber& x) {
  // for odd p: |x-1|_p < p^{-1/(p-1)}  <=>  x a unit with leading digit 1
  return !x.is_zero() && x.valuation() == 0 && x.leading_digit() == 1;
}

std::pair<i64, PadicNumber> unit_decompose(const PadicNumber& x) {
  if (x.is_zero())
    throw Error(ErrorCode::ZeroDecompose, "cannot decompose (apparent) zero");
  return {x.valuation(), shift_valuation(x, -x.valuation())};
}

PadicNumber shift_valuation(const PadicNumber& x, i64 delta) {
  if (x.is_exact_zero()) return x;
  if (x.is_apparent_zero())
    return PadicNumber::zero_mod(x.prime(),
                                 checked_add(x.known_exp_, delta));
  PadicNumber r = x;
  r.valuation_ = checked_add(r.valuation_, delta);
  r.known_exp_ = checked_add(r.known_exp_, delta);
  return r;
}

PadicNumber truncate_abs(const PadicNumber& x, i64 abs_exp) {
  if (x.is_exact_zero()) return x;
  if (x.is_apparent_zero())
    return PadicNumber::zero_mod(x.prime(),
                                 std::min(x.abs_precision(), abs_exp));
  if (abs_exp >= x.abs_precision()) return x;
  if (abs_exp <= x.valuation_)
    return PadicNumber::zero_mod(x.prime(), abs_exp);
  PadicNumber r = x;
  r.digits_.resize(static_cast<std::size_t>(abs_exp - x.valuation_));
  r.known_exp_ = abs_exp;
  return r;
}

PadicNumber pad_exact(const PadicNumber& x, std::int32_t digits) {
  if (digits < 1)
    throw Error(ErrorCode::InvalidArgument, "need at least one digit");
  if (x.is_exact_zero()) return x;
  if (x.is_apparent_zero())
    throw Error(ErrorCode::PrecisionExhausted,
                "cannot pad an apparent zero to an exact representative");
  if (static_cast<std::size_t>(digits) <= x.unit_digits().size()) return x;
  check_digit_budget(static_cast<std::size_t>(digits));
  PadicNumber r = x;
  r.digits_.resize(static_cast<std::size_t>(digits), 0);
  r.known_exp_ = checked_add(r.valuation_, digits);
  return r;
}

bool congruent_mod(const PadicNumber& x, const PadicNumber& y, i64 e) {
  return sub(x, y).valuation_lower_bound() >= e;
}

}  // namespace padic
