#pragma once

#include <span>
#include <string>
#include <vector>

#include "primebounds/exactmath/poly.hpp"

namespace pb::exact {

/// coeff * factor(s) * exp(-exp_rate * s), evaluated at a scale s.
struct LogspaceTerm {
  BigRational coeff;
  Poly factor;
  BigRational exp_rate;
};

struct LogspaceOutcome {
  /// Sum of the terms is strictly below the threshold.
  bool below = false;
  double sum = 0.0;
  std::string sum_text;
  /// Natural log of each term's magnitude (terms far below double range stay visible here).
  std::vector<double> log_terms;
  /// Rigorous bound on |computed sum - true sum| at the final precision.
  double margin = 0.0;
  unsigned bits_used = 0;
  int escalations = 0;
};

/// Decides sum(terms at `at`) < threshold.
///
/// Every term is formed in log space at `min_bits` of working precision; the
/// sign is accepted only when |sum - threshold| exceeds the accumulated
/// rounding margin, otherwise precision is doubled. Throws
/// pb::PrecisionInsufficient past `max_bits`, and pb::DomainError when some
/// factor(at) <= 0.
LogspaceOutcome logspace_sum_compare(std::span<const LogspaceTerm> terms, const BigRational& at,
                                     const BigRational& threshold, unsigned min_bits = 128,
                                     unsigned max_bits = 4096);

}  // namespace pb::exact
