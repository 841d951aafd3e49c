#pragma once

#include <cstdint>

namespace pb::primes {

/// An enclosure of theta(x) = sum_{p <= x} log p.
///
/// The true value lies in [value - abs_error, value + abs_error]. Callers that
/// feed theta into an inequality use lower() or upper(), whichever is adverse.
struct ThetaValue {
  double value = 0.0;
  double abs_error = 0.0;

  double lower() const { return value - abs_error; }
  double upper() const { return value + abs_error; }
  bool contains(long double exact) const {
    return static_cast<long double>(lower()) <= exact && exact <= static_cast<long double>(upper());
  }

  friend bool operator==(const ThetaValue&, const ThetaValue&) = default;
};

/// Interval sum of two enclosures (one extra rounding is charged to the error).
ThetaValue operator+(const ThetaValue& a, const ThetaValue& b);

/// Compensated (Kahan) summation of logarithms with a rigorous error bound.
///
/// The bound charges one ulp per logarithm, the classical Kahan bound
/// (2u + 4nu^2) * sum|x_i| for the summation itself, and the error carried
/// by any pre-rounded terms added through add(term, error).
class ThetaAccumulator {
 public:
  void add_log_of(std::uint64_t p);
  void add(double term, double term_error = 0.0);
  void add(const ThetaValue& part) { add(part.value, part.abs_error); }

  ThetaValue result() const;
  std::uint64_t terms() const { return count_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double abs_sum_ = 0.0;
  double carried_error_ = 0.0;
  std::uint64_t count_ = 0;
};

}  // namespace pb::primes
