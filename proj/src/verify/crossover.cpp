#include "primebounds/verify/crossover.hpp"

#include <chrono>
#include <cmath>

#include "primebounds/bounds/catalogue.hpp"
#include "primebounds/error.hpp"
#include "primebounds/verify/compare.hpp"

namespace pb::verify {

using bounds::BoundSpec;
using exact::BigFloat;

namespace {

int sign_of_difference(const BoundSpec& a, const BoundSpec& b, double log_x, unsigned& escalations) {
  const double x = std::exp(log_x);
  const double va = bounds::eval_bound(a, x);
  const double vb = bounds::eval_bound(b, x);
  SignDecision d;
  try {
    d = decide_sign(va - vb, std::max(std::abs(va), std::abs(vb)), [&](unsigned bits) {
    const BigFloat xb = exact::exp(BigFloat(log_x, bits));
      return bounds::eval_bound_hp(a, xb) - bounds::eval_bound_hp(b, xb);
    });
  } catch (const PrecisionInsufficient&) {
    return 0;  // indistinguishable from zero at every tier
  }
  escalations += d.escalations;
  return d.sign;
}

}  // namespace

Crossover find_crossover(const BoundSpec& a, const BoundSpec& b, double x_lo, double x_hi) {
  if (!(x_lo > 1.0 && x_hi > x_lo)) throw DomainError("crossover bracket must satisfy 1 < x_lo < x_hi");
  double lo = std::log(x_lo);
  double hi = std::log(x_hi);
  unsigned escalations = 0;
  const int s_lo = sign_of_difference(a, b, lo, escalations);
  const int s_hi = sign_of_difference(a, b, hi, escalations);
  if (s_lo == 0 && s_hi == 0) {
    throw NoSignChange(a.name + " - " + b.name + " vanishes at both ends of the bracket");
  }
  if (s_lo == 0) return {x_lo, lo, 0, s_hi};
  if (s_hi == 0) return {x_hi, hi, 0, s_hi};
  if (s_lo == s_hi) {
    throw NoSignChange(a.name + " - " + b.name + " has the same sign at both ends of the bracket");
  }
  Crossover out;
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    const int s = sign_of_difference(a, b, mid, escalations);
    ++out.steps;
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s == s_lo ? lo : hi) = mid;
  }
  out.log_x = 0.5 * (lo + hi);
  out.x = std::exp(out.log_x);
  out.sign_above = s_hi;
  return out;
}

Crossover find_crossover(std::string_view a, std::string_view b, double x_lo, double x_hi) {
  const auto& cat = bounds::BoundCatalogue::builtin();
  return find_crossover(cat.get(a), cat.get(b), x_lo, x_hi);
}

VerificationReport verify_crossover_t101_dusart308() {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.campaign = "crossover";
  try {
    const Crossover c = find_crossover("t101", "dusart308", std::exp(20.0), std::exp(25.0));
    report.checked = c.steps;
    report.details["bounds"] = {"t101", "dusart308"};
    report.details["log_x"] = c.log_x;
    report.details["x"] = c.x;
    report.details["expected_log_x"] = 23.11;
    report.record_margin(c.x, 0.01 - std::abs(c.log_x - 23.11));
    if (std::abs(c.log_x - 23.11) > 0.01) {
      report.add_counterexample({std::to_string(c.log_x), c.log_x, 23.11, "crossover log x differs from 23.11 by more than 0.01"});
    }
    if (c.sign_above >= 0) report.add_counterexample({std::to_string(c.log_x), 0, 0, "t101 is not the smaller bound above the crossover"});
  } catch (const NoSignChange& e) {
    report.add_counterexample({"[e^20, e^25]", 0, 0, e.what()});
  }
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pb::verify
