#include "primebounds/verify/pinned.hpp"

#include <chrono>

#include "primebounds/bounds/catalogue.hpp"
#include "primebounds/bounds/constants.hpp"
#include "primebounds/exactmath/bigfloat.hpp"

namespace pb::verify {

using exact::BigRational;

namespace {

const BigRational& pinned(std::string_view name) { return bounds::ProofConstants::builtin().value(name); }

BigRational pow(const BigRational& v, unsigned k) {
  BigRational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= v;
  return r;
}

// x delta(y)/y for the sum-form bound t101, i.e. the bound with log x replaced by y.
BigRational sum_bound_at(std::string_view name, const BigRational& x, const BigRational& y) {
  const auto& s = std::get<bounds::SumBound>(bounds::BoundCatalogue::builtin().get(name).form);
  BigRational total = 0;
  for (std::size_t i = 0; i < s.coefficients.size(); ++i) total += s.coefficients[i] / pow(y, static_cast<unsigned>(i + 1));
  return x * total;
}

// x / D(y) for a Panaitopol-form bound.
BigRational panaitopol_at(std::string_view name, const BigRational& x, const BigRational& y) {
  const auto& p = std::get<bounds::PanaitopolBound>(bounds::BoundCatalogue::builtin().get(name).form);
  return x / bounds::panaitopol_denominator_fn(p).eval(y);
}

}  // namespace

VerificationReport verify_pinned_constants() {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.campaign = "constants";
  nlohmann::json checks = nlohmann::json::array();
  // lhs >= rhs (or > when strict).
  auto require = [&](const std::string& name, const BigRational& lhs, const BigRational& rhs, bool strict,
                     const std::string& statement) {
    ++report.checked;
    const bool ok = strict ? lhs > rhs : lhs >= rhs;
    checks.push_back({{"check", name}, {"statement", statement}, {"lhs", exact::to_decimal(lhs, 20)},
                      {"rhs", exact::to_decimal(rhs, 20)}, {"holds", ok}});
    report.record_margin(static_cast<double>(report.checked), exact::to_double(lhs - rhs));
    if (!ok) report.add_counterexample({name, exact::to_double(lhs), exact::to_double(rhs), statement});
  };

  const BigRational x1 = pow(10, 14);
  const BigRational& pi1 = pinned("pi_1e14");
  const BigRational& th_lo = pinned("theta_1e14_lower");
  const BigRational& th_hi = pinned("theta_1e14_upper");
  const BigRational& a = pinned("log_1e14_lower");
  const BigRational& a_hi = pinned("log_1e14_upper");
  const BigRational& b = pinned("b_thm13");
  const BigRational& k1 = pinned("K1_upper");
  const BigRational& k1_lo = pinned("K1_lower");

  const exact::LogEnclosure log_x1 = exact::log_enclosure(x1);
  require("log_1e14_lower", log_x1.lo, a, false, "log 10^14 >= 32.23619");
  require("log_1e14_upper", a_hi, log_x1.hi, false, "log 10^14 <= 32.2362");
  require("log_1e14_b", b, log_x1.hi, false, "log 10^14 <= 32.236192");

  require("K1_upper", k1, pi1 - th_lo / a_hi, false, "pi(x1) - theta(x1)/log x1 <= 102839438084");
  require("K1_lower", pi1 - th_hi / a, k1_lo, false, "pi(x1) - theta(x1)/log x1 >= 102838475779");

  {
    const BigRational& s = x1;
    const BigRational& t = a;
    const BigRational f = k1 * pow(t, 7) + (k1 + s) * pow(t, 6) + (BigRational(335, 100) * k1 + s) * pow(t, 5) +
                          (BigRational(1265, 100) * k1 + 3 * s) * pow(t, 4) +
                          (BigRational(717, 10) * k1 + 13 * s) * pow(t, 3) +
                          (exact::parse_rational("466.1275") * k1 + exact::parse_rational("72.05") * s) * pow(t, 2) +
                          (exact::parse_rational("3489.8225") * k1 + exact::parse_rational("467.3") * s) * t +
                          exact::parse_rational("3494.25") * s;
    require("f_x1_a", f, pow(b, 8) * k1, false, "f(x1, a) >= b^8 K1");
  }

  // J(x1) itself, bounded with a tight log enclosure rather than the pinned K1.
  const BigRational eta = pinned("eta3_e30");
  const BigRational j_upper_at_x1 = pi1 - th_lo / log_x1.hi + x1 / log_x1.lo + eta * x1 / pow(log_x1.lo, 4);
  require("delta_minus_J_x1", sum_bound_at("t101", x1, a_hi), j_upper_at_x1, true,
          "delta_hat(x1, 32.2362) - J_{3,0.35}(x1) > 0");
  report.details["delta_hat_minus_K1_envelope"] =
      exact::to_decimal(sum_bound_at("t101", x1, a_hi) - (k1 + x1 / log_x1.lo + eta * x1 / pow(log_x1.lo, 4)), 12);

  const BigRational j_lower_at_x1 = k1_lo + x1 / log_x1.hi - eta * x1 / pow(log_x1.lo, 4);
  require("J_minus_phi_1e14", j_lower_at_x1 - panaitopol_at("t104", x1, log_x1.lo), pinned("J_minus_phi_1e14"), false,
          "J_{3,-0.35}(x1) - phi(x1) >= 322936");
  report.details["J_minus_phi_1e14_with_32.23619"] = exact::to_decimal(
      k1_lo + x1 / a_hi - eta * x1 / pow(a, 4) - panaitopol_at("t104", x1, a), 12);

  const BigRational x2 = BigRational(8) * pow(10, 9);
  const exact::LogEnclosure log_x2 = exact::log_enclosure(x2);
  const BigRational& l2_lo = pinned("log_8e9_lower");
  const BigRational& l2_coarse = pinned("log_8e9_lower_coarse");
  const BigRational& l2_hi = pinned("log_8e9_upper");
  require("log_8e9_lower", log_x2.lo, l2_lo, false, "log(8*10^9) >= 22.8027");
  require("log_8e9_lower_coarse", log_x2.lo, l2_coarse, false, "log(8*10^9) >= 22.8");
  require("log_8e9_upper", l2_hi, log_x2.hi, false, "log(8*10^9) <= 22.8028");
  const BigRational pt2 = pinned("pi_8e9") - pinned("theta_8e9_upper") / l2_lo;
  require("pi_theta_8e9", pt2, pinned("pi_theta_8e9"), false,
          "pi(x2) - theta(x2)/log x2 >= 16952796");
  const BigRational eta2 = exact::parse_rational("0.01");
  require("J_minus_phi_8e9",
          pinned("pi_theta_8e9") + x2 / l2_hi - eta2 * x2 / pow(l2_coarse, 3) - panaitopol_at("t104", x2, l2_lo),
          pinned("J_minus_phi_8e9"), false, "J_{2,-0.01}(x2) - phi(x2) >= 2360");
  report.details["J_minus_phi_8e9_with_22.8"] = exact::to_decimal(
      pinned("pi_theta_8e9") + x2 / l2_hi - eta2 * x2 / pow(l2_coarse, 3) - panaitopol_at("t104", x2, l2_coarse), 12);

  {
    const BigRational& c = pinned("gap_c");
    const BigRational& z1 = pinned("z1_2.65");
    const BigRational& z3 = pinned("z3_2.65");
    const BigRational l_hi = exact::log_enclosure(z3).hi;
    require("z3_reaches_z1", z3 * (1 + c / pow(l_hi, 3)), z1, false, "z3 c(z3) >= z1(2.65)");
    const BigRational below = z3 - 1;
    const BigRational l_lo = exact::log_enclosure(below).lo;
    require("z3_minimal", z1, below * (1 + c / pow(l_lo, 3)), true, "(z3 - 1) c(z3 - 1) < z1(2.65)");
  }

  report.use_axiom("theta(10^14) in [99999990573246, 99999990573247]");
  report.use_axiom("pi(10^14) = 3204941750802");
  report.use_axiom("theta(8*10^9) <= 7999890793");
  report.use_axiom("z_1(2.65) = 36917641");
  report.details["checks"] = std::move(checks);
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pb::verify
