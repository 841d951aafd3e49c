#include "primebounds/verify/inequalities.hpp"

#include <chrono>

#include "primebounds/bounds/catalogue.hpp"
#include "primebounds/error.hpp"
#include "primebounds/exactmath/registry.hpp"

namespace pb::verify {

using exact::BigRational;
using exact::Poly;
using exact::RationalFn;

namespace {

const Poly& reg(std::string_view name) { return exact::PolynomialRegistry::builtin().get(name).poly; }

RationalFn derivative_of(std::string_view bound) {
  return bounds::bound_derivative_in_t(bounds::BoundCatalogue::builtin().get(bound));
}

std::vector<RegisteredInequality> build() {
  using exact::parse_rational;
  std::vector<RegisteredInequality> v;
  v.push_back({"eq318", "xi'(x) - J'_{3,0.35}(x) >= h(t)/(g(t)^2 t^4) >= 0", "Theorem 1.3 proof",
               parse_rational("3.804"), std::nullopt, [] {
                 const Poly& g = reg("g_thm13");
                 return std::pair{derivative_of("t103") - derivative_of("J_3_0.35_1e14"),
                                  RationalFn(reg("h_thm13"), g * g * Poly::monomial(1, 4))};
               }});
  // The exact difference has the opposite sign and one more power of t.
  v.push_back({"eq318_reversed", "J'_{3,0.35}(x) - xi'(x) >= h(t)/(g(t)^2 t^5) >= 0", "Theorem 1.3 proof",
               parse_rational("3.804"), std::nullopt, [] {
                 const Poly& g = reg("g_thm13");
                 return std::pair{derivative_of("J_3_0.35_1e14") - derivative_of("t103"),
                                  RationalFn(reg("h_thm13"), g * g * Poly::monomial(1, 5))};
               }});
  v.push_back({"eq319", "xi'(x) - li'(x) >= r(t)/(g(t)^2 t) >= 0", "Theorem 1.3 proof", parse_rational("10.9"),
               std::nullopt, [] {
                 const Poly& g = reg("g_thm13");
                 return std::pair{derivative_of("t103") - derivative_of("li"),
                                  RationalFn(reg("r_thm13"), g * g * Poly::monomial(1, 1))};
               }});
  v.push_back({"eq321", "J'_{3,-0.35}(x) - phi'(x) >= r(t)/((varphi t^6)^2 t^5) >= 0", "Theorem 1.4 proof",
               parse_rational("3.79"), std::nullopt, [] {
                 const Poly& big = reg("S_thm12");
                 return std::pair{derivative_of("J_3_-0.35_1e14") - derivative_of("t104"),
                                  RationalFn(reg("r_thm14"), big * big * Poly::monomial(1, 5))};
               }});
  v.push_back({"eq322", "J'_{2,-0.01}(x) - phi'(x) >= h(t)/((varphi t^6)^2 t^4) >= 0", "Theorem 1.4 proof",
               BigRational(23), BigRational(33), [] {
                 const Poly& big = reg("S_thm12");
                 return std::pair{derivative_of("J_2_-0.01_8e9") - derivative_of("t104"),
                                  RationalFn(reg("h_thm14"), big * big * Poly::monomial(1, 4))};
               }});
  v.push_back({"inverse_t", "1/t >= 0", "sanity", BigRational(1), std::nullopt,
               [] { return std::pair{RationalFn::inverse_power(1), RationalFn()}; }});
  return v;
}

std::string range_text(const BigRational& lo, const exact::UpperEnd& hi) {
  return "[" + exact::to_decimal(lo) + ", " + (hi ? exact::to_decimal(*hi) : std::string("inf")) + ")";
}

}  // namespace

InequalityResult verify_rational_inequality(const RationalFn& lhs, const RationalFn& rhs, const BigRational& t_min,
                                            const exact::UpperEnd& t_max) {
  const RationalFn diff = lhs - rhs;
  InequalityResult out;
  out.numerator = diff.num();
  out.denominator = diff.den();
  const int s = out.denominator.sign_at(t_min);
  if (s == 0 || (out.denominator.degree() > 0 && exact::sturm_count_roots(out.denominator, t_min, t_max) != 0)) {
    throw DenominatorSignIndeterminate("denominator changes sign on " + range_text(t_min, t_max));
  }
  out.denominator_sign = s;
  const Poly oriented = s > 0 ? out.numerator : -out.numerator;
  if (oriented.is_zero()) {
    out.holds = true;
    out.certificate.holds = true;
    out.certificate.detail = "difference vanishes identically";
    return out;
  }
  out.certificate = exact::is_nonneg_on_interval(oriented, t_min, t_max);
  out.holds = out.certificate.holds;
  return out;
}

const std::vector<RegisteredInequality>& inequality_catalogue() {
  static const std::vector<RegisteredInequality> list = build();
  return list;
}

VerificationReport verify_named_inequality(std::string_view name) {
  for (const auto& ineq : inequality_catalogue()) {
    if (ineq.name != name) continue;
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.campaign = ineq.name;
    const auto [lhs, rhs] = ineq.sides();
    const InequalityResult main = verify_rational_inequality(lhs, rhs, ineq.t_min, ineq.t_max);
    const InequalityResult floor = verify_rational_inequality(rhs, RationalFn(), ineq.t_min, ineq.t_max);
    report.checked = 2;
    const std::string range = range_text(ineq.t_min, ineq.t_max);
    if (!main.holds) report.add_counterexample({range, 0.0, 0.0, "lhs >= rhs fails: " + main.certificate.detail});
    if (!floor.holds) report.add_counterexample({range, 0.0, 0.0, "rhs >= 0 fails: " + floor.certificate.detail});
    report.details["statement"] = ineq.statement;
    report.details["range"] = range;
    report.details["location"] = ineq.location;
    report.details["cleared_numerator_degree"] = main.numerator.degree();
    report.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw UnknownName("unknown inequality: " + std::string(name));
}

VerificationReport verify_all_inequalities() {
  VerificationReport report;
  report.campaign = "inequalities_all";
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& ineq : inequality_catalogue()) {
    VerificationReport one = verify_named_inequality(ineq.name);
    rows.push_back({{"name", ineq.name}, {"status", to_string(one.status)}, {"range", one.details["range"]}});
    one.details = nlohmann::json::object();
    report.merge(one);
  }
  report.details["inequalities"] = rows;
  return report;
}

}  // namespace pb::verify
