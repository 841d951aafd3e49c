#include "primebounds/verify/eq312.hpp"

#include <chrono>

#include "primebounds/bounds/constants.hpp"
#include "primebounds/error.hpp"

namespace pb::verify {

using exact::BigRational;
using exact::Poly;

namespace {

const BigRational& pinned(std::string_view name) { return bounds::ProofConstants::builtin().value(name); }

}  // namespace

exact::LogspaceOutcome eq312_sum(unsigned i, const BigRational& eps, const BigRational& threshold) {
  const Poly cube = Poly::monomial(1, 3);
  const Poly shifted_cube = Poly({1, 1}) * Poly({1, 1}) * Poly({1, 1});
  const exact::LogspaceTerm terms[] = {
      {exact::parse_rational("1.00007"), cube, BigRational(1, 2)},
      {exact::parse_rational("1.78"), cube, BigRational(2, 3)},
      {eps, shifted_cube, BigRational(0)},
  };
  return exact::logspace_sum_compare(terms, pinned("eq312_a") + i, threshold);
}

VerificationReport verify_eq312(const BigRational& threshold) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.campaign = "eq312";
  nlohmann::json rows = nlohmann::json::array();
  double max_sum = -1.0;
  unsigned max_i = 0;
  std::string max_eps;

  const struct {
    const char* eps;
    unsigned lo, hi;
  } legs[] = {{"eq312_eps", 0, 75}, {"eq312_eps_tail", 75, 100}};

  try {
    for (const auto& leg : legs) {
      const BigRational& eps = pinned(leg.eps);
      for (unsigned i = leg.lo; i <= leg.hi; ++i) {
        const exact::LogspaceOutcome out = eq312_sum(i, eps, threshold);
        ++report.checked;
        report.escalations += static_cast<std::uint64_t>(out.escalations);
        report.record_margin(i, exact::to_double(threshold) - out.sum);
        rows.push_back({{"i", i}, {"eps", exact::to_decimal(eps)}, {"sum", out.sum_text}, {"bits", out.bits_used}});
        if (out.sum > max_sum) {
          max_sum = out.sum;
          max_i = i;
          max_eps = exact::to_decimal(eps);
        }
        if (!out.below) {
          report.add_counterexample(
              {std::to_string(i), out.sum, exact::to_double(threshold), "eps = " + exact::to_decimal(eps)});
        }
      }
    }
  } catch (const PrecisionInsufficient& e) {
    report.mark_indeterminate(e.what());
  }
  report.details["threshold"] = exact::to_decimal(threshold);
  report.details["max_sum"] = max_sum;
  report.details["max_i"] = max_i;
  report.details["max_eps"] = max_eps;
  report.details["rows"] = std::move(rows);
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_eq312() { return verify_eq312(pinned("eq312_bound")); }

}  // namespace pb::verify
