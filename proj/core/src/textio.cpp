#include "padic/textio.hpp"

#include <charconv>
#include <sstream>

namespace padic {
namespace {

long long parse_ll(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
  return v;
}

PadicNumber parse_digit_form(const std::string& text, Prime p,
                             std::int32_t digits) {
  auto at = text.find('@');
  std::string digit_part = text.substr(0, at);
  long long valuation = parse_ll(text.substr(at + 1));
  std::vector<std::uint64_t> ds;
  std::stringstream ss(digit_part);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    long long d = parse_ll(tok);
    if (d < 0 || static_cast<std::uint64_t>(d) >= p.value())
      throw Error(ErrorCode::ParseError,
                  "digit " + tok + " out of range for p = " +
                      std::to_string(p.value()));
    ds.push_back(static_cast<std::uint64_t>(d));
  }
  if (ds.empty() || ds[0] == 0)
    throw Error(ErrorCode::ParseError,
                "canonical digit form needs a nonzero leading digit");
  if (static_cast<std::int32_t>(ds.size()) > digits)
    ds.resize(static_cast<std::size_t>(digits));
  return PadicNumber::from_unit_digits(p, valuation, std::move(ds));
}

}  // namespace

std::string format_padic(const PadicNumber& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  const auto& d = x.unit_digits();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out << ',';
    out << d[i];
  }
  out << '@' << x.valuation();
  return out.str();
}

PadicNumber parse_padic(const std::string& text, Prime p,
                        std::int32_t digits) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty literal");
  if (text.find('@') != std::string::npos)
    return parse_digit_form(text, p, digits);
  if (auto slash = text.find('/'); slash != std::string::npos) {
    long long num = parse_ll(text.substr(0, slash));
    long long den = parse_ll(text.substr(slash + 1));
    return PadicNumber::from_rational(num, den, p, digits);
  }
  return PadicNumber::from_integer(parse_ll(text), p, digits);
}

}  // namespace padic
