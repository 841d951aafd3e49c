#include "primebounds/verify/compare.hpp"

#include <cmath>

#include "primebounds/error.hpp"

namespace pb::verify {

namespace {

// Clear of the rounding floor: |v| > 2^-(bits - 32) |scale|.
int clear_sign(const exact::BigFloat& v, double scale, unsigned bits) {
  const exact::BigFloat floor = exact::BigFloat(std::fabs(scale), bits) *
                                exact::pow(exact::BigFloat(0.5, bits), bits - 32);
  if (exact::abs(v) > floor) return v.sign() > 0 ? 1 : -1;
  return 0;
}

}  // namespace

SignDecision decide_sign(double difference, double scale,
                         const std::function<exact::BigFloat(unsigned bits)>& high_precision) {
  SignDecision out;
  out.difference = difference;
  if (std::isfinite(difference) && std::fabs(difference) >= kEscalationThreshold * std::fabs(scale) &&
      difference != 0.0) {
    out.sign = difference > 0 ? 1 : -1;
    return out;
  }
  for (unsigned bits = 128; bits <= 512; bits *= 2) {
    const exact::BigFloat v = high_precision(bits);
    ++out.escalations;
    const int s = clear_sign(v, scale, bits);
    if (s == 0) continue;
    const exact::BigFloat check = high_precision(2 * bits);
    ++out.escalations;
    if (clear_sign(check, scale, 2 * bits) != s) {
      throw PrecisionInsufficient("sign changed between " + std::to_string(bits) + " and " +
                                  std::to_string(2 * bits) + " bits");
    }
    out.sign = s;
    out.difference = check.to_double();
    return out;
  }
  throw PrecisionInsufficient("comparison undecided at 1024 bits");
}

}  // namespace pb::verify
