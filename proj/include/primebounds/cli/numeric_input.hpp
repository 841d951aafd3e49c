#pragma once

#include <cstdint>
#include <string_view>

#include "primebounds/exactmath/bigfloat.hpp"

namespace pb::cli {

/// Thrown for malformed command-line values; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nonnegative integer written exactly: "100", "1e8", "1.4e9", "5*10^5".
std::uint64_t parse_count(std::string_view text);

/// A real abscissa: an exact decimal ("1e6", "0.5", "10^14") or a power of e
/// written "e^23.11". Both forms are kept exactly.
struct RealInput {
  exact::BigRational value;
  bool is_log = false;

  double to_double() const;
  exact::BigFloat to_bigfloat(unsigned bits) const;
  /// log of the abscissa as a double.
  double log_value() const;
};

RealInput parse_real(std::string_view text);

}  // namespace pb::cli
