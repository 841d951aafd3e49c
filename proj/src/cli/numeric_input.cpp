#include "primebounds/cli/numeric_input.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "primebounds/error.hpp"

namespace pb::cli {

using exact::BigFloat;
using exact::BigRational;

namespace {

// Decimal, fraction, or mantissa*10^k / 10^k.
BigRational parse_exact(std::string_view text) {
  try {
    std::string_view mantissa = "1";
    std::string_view power = text;
    if (auto star = text.find('*'); star != std::string_view::npos) {
      mantissa = text.substr(0, star);
      power = text.substr(star + 1);
    }
    if (power.starts_with("10^")) {
      const BigRational m = exact::parse_rational(mantissa);
      const std::string_view k = power.substr(3);
      return m * exact::parse_rational("1e" + std::string(k));
    }
    if (mantissa != "1" || text.find('*') != std::string_view::npos) throw DomainError("bad product");
    return exact::parse_rational(text);
  } catch (const Error&) {
    throw UsageError("not an exact number: '" + std::string(text) + "'");
  }
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  const BigRational v = parse_exact(text);
  if (v < 0 || v.get_den() != 1) throw UsageError("expected a nonnegative integer: '" + std::string(text) + "'");
  if (v > BigRational(exact::BigInt(std::numeric_limits<std::uint64_t>::max()))) {
    throw UsageError("integer too large: '" + std::string(text) + "'");
  }
  return v.get_num().get_ui();
}

RealInput parse_real(std::string_view text) {
  if (text.starts_with("e^")) return {parse_exact(text.substr(2)), true};
  return {parse_exact(text), false};
}

double RealInput::to_double() const { return is_log ? std::exp(exact::to_double(value)) : exact::to_double(value); }

BigFloat RealInput::to_bigfloat(unsigned bits) const {
  return is_log ? exact::exp(BigFloat(value, bits)) : BigFloat(value, bits);
}

double RealInput::log_value() const {
  return is_log ? exact::to_double(value) : exact::log(BigFloat(value, 128)).to_double();
}

}  // namespace pb::cli
