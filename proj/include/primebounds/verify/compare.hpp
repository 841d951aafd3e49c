#pragma once

#include <functional>

#include "primebounds/exactmath/bigfloat.hpp"

namespace pb::verify {

/// Relative margin below which a double-precision comparison is escalated.
inline constexpr double kEscalationThreshold = 1e-9;

struct SignDecision {
  int sign = 0;
  double difference = 0.0;
  /// Number of higher-precision evaluations performed.
  unsigned escalations = 0;
};

/// Sign of lhs - rhs.
///
/// `difference` is the double-precision value and `scale` the magnitude of
/// the operands. When |difference| < 1e-9 |scale|, `high_precision(bits)` is
/// evaluated at 128 bits and the sign is accepted only if it is clear of the
/// rounding floor and confirmed again at twice the precision. Tiers go up to
/// 1024 bits; beyond that pb::PrecisionInsufficient is thrown.
SignDecision decide_sign(double difference, double scale,
                         const std::function<exact::BigFloat(unsigned bits)>& high_precision);

}  // namespace pb::verify
