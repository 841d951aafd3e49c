#include "primebounds/primes/theta.hpp"

#include <cmath>
#include <limits>

namespace pb::primes {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

}  // namespace

ThetaValue operator+(const ThetaValue& a, const ThetaValue& b) {
  const double v = a.value + b.value;
  return {v, a.abs_error + b.abs_error + 2 * kUnitRoundoff * std::fabs(v)};
}

void ThetaAccumulator::add_log_of(std::uint64_t p) {
  const double term = std::log(static_cast<double>(p));
  // std::log is faithful (< 1 ulp); one ulp is at most 2u relative.
  add(term, 2 * kUnitRoundoff * term);
}

void ThetaAccumulator::add(double term, double term_error) {
  const double y = term - compensation_;
  const double t = sum_ + y;
  compensation_ = (t - sum_) - y;
  sum_ = t;
  abs_sum_ += std::fabs(term);
  carried_error_ += term_error;
  ++count_;
}

ThetaValue ThetaAccumulator::result() const {
  const double n = static_cast<double>(count_);
  const double u = kUnitRoundoff;
  // abs_sum_ is itself rounded; (1 + 2nu) covers its own accumulated error.
  const double magnitude = abs_sum_ * (1.0 + 2.0 * n * u);
  const double summation = (2.0 * u + 4.0 * n * u * u) * magnitude;
  return {sum_, (carried_error_ + summation) * (1.0 + 4.0 * u)};
}

}  // namespace pb::primes
