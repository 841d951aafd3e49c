#pragma once

#include <string_view>

#include "primebounds/bounds/bound.hpp"
#include "primebounds/verify/report.hpp"

namespace pb::verify {

struct Crossover {
  double x = 0.0;
  double log_x = 0.0;
  /// Bisection steps taken.
  unsigned steps = 0;
  /// Sign of a - b just above the crossover.
  int sign_above = 0;
};

/// Abscissa in [x_lo, x_hi] where a - b changes sign, bisected in log x to a
/// relative width of 1e-6. Throws pb::NoSignChange when a - b has the same
/// sign at both ends, and pb::DomainError unless 1 < x_lo < x_hi.
Crossover find_crossover(const bounds::BoundSpec& a, const bounds::BoundSpec& b, double x_lo, double x_hi);
Crossover find_crossover(std::string_view a, std::string_view b, double x_lo, double x_hi);

/// t101 against dusart308 on [e^20, e^25], reported with the located log x.
VerificationReport verify_crossover_t101_dusart308();

}  // namespace pb::verify
