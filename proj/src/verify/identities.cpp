#include "primebounds/verify/identities.hpp"

#include <chrono>

#include "primebounds/bounds/catalogue.hpp"
#include "primebounds/error.hpp"
#include "primebounds/exactmath/registry.hpp"

namespace pb::verify {

using exact::Poly;
using exact::RationalFn;

namespace {

const Poly& reg(std::string_view name) { return exact::PolynomialRegistry::builtin().get(name).poly; }

RationalFn derivative_of(std::string_view bound) {
  return bounds::bound_derivative_in_t(bounds::BoundCatalogue::builtin().get(bound));
}

RationalFn over_t(const Poly& p, unsigned k) { return RationalFn(p, Poly::monomial(1, k)); }

// R(y) = sum_i c_i / y^{i-1} for a sum-form bound x R(log x)/log x.
RationalFn sum_form_R(std::string_view bound) {
  const auto& s = std::get<bounds::SumBound>(bounds::BoundCatalogue::builtin().get(bound).form);
  RationalFn r;
  for (unsigned i = 1; i <= s.coefficients.size(); ++i) r += RationalFn::inverse_power(i - 1, s.coefficients[i - 1]);
  return r;
}

RationalFn denominator_of(std::string_view bound) {
  return bounds::panaitopol_denominator_fn(
      std::get<bounds::PanaitopolBound>(bounds::BoundCatalogue::builtin().get(bound).form));
}

std::vector<RegisteredIdentity> build() {
  std::vector<RegisteredIdentity> v;
  v.push_back({"thm12_RST", "y^13 R(y) S(y) = y^14 - T(y)", "Theorem 1.2 proof", [] {
                 const RationalFn lhs = RationalFn(Poly::monomial(1, 13)) * sum_form_R("U_thm12") * denominator_of("t104");
                 return std::pair{lhs, RationalFn(Poly::monomial(1, 14) - reg("T_thm12"))};
               }});
  v.push_back({"eq316", "delta'(x) - J'_{3,0.35}(x) = (1687.9t - 54411.2)/t^9", "Theorem 1.1 proof", [] {
                 return std::pair{derivative_of("t101") - derivative_of("J_3_0.35_1e14"), over_t(reg("eq316_num"), 9)};
               }});
  v.push_back({"thm11_li", "delta'(x) - li'(x) = (0.35t^5 - 1.05t^4 + 1687.9t - 54411.2)/t^9", "Theorem 1.1 proof",
               [] {
                 return std::pair{derivative_of("t101") - derivative_of("li"), over_t(reg("thm11_li_num"), 9)};
               }});
  v.push_back({"eq320", "g(t)^2 xi'(x) / t^5 = s(t)", "Theorem 1.3 proof", [] {
                 const Poly& g = reg("g_thm13");
                 return std::pair{RationalFn(g * g) * derivative_of("t103") / RationalFn(Poly::monomial(1, 5)),
                                  RationalFn(reg("s_thm13"))};
               }});
  v.push_back({"thm12_Uprime", "U'(x) = u(t)/t^9", "Theorem 1.2 proof",
               [] { return std::pair{derivative_of("U_thm12"), over_t(reg("u_thm12"), 9)}; }});
  v.push_back({"thm14_phiprime", "phi'(x) = s(t) t^5 / (varphi(x) t^6)^2", "Theorem 1.4 proof", [] {
                 const Poly& big = reg("S_thm12");
                 return std::pair{derivative_of("t104"), RationalFn(reg("s_thm14") * Poly::monomial(1, 5), big * big)};
               }});
  v.push_back({"thm13_g_denominator", "g(t) = t^6 (denominator of xi)", "Theorem 1.3 proof", [] {
                 return std::pair{RationalFn(reg("g_thm13")), RationalFn(Poly::monomial(1, 6)) * denominator_of("t103")};
               }});
  v.push_back({"thm12_S_denominator", "y^6 S(y) = t^6 varphi(t)", "Theorem 1.2 proof", [] {
                 return std::pair{RationalFn(reg("S_thm12")), RationalFn(Poly::monomial(1, 6)) * denominator_of("t104")};
               }});
  v.push_back({"thm13_expansion", "t^9 + t^8 + 3t^7 + ... + 1221.437875 = t^10 - (t^3 + 0.35) g(t)",
               "Theorem 1.3 proof", [] {
                 const Poly lhs = Poly::parse(
                     "t^9 + t^8 + 3t^7 + 13t^6 + 72.05t^5 + 467.3t^4 + 3494.25t^3 + 25.095t^2 + 163.144625t + "
                     "1221.437875");
                 const Poly rhs = Poly::monomial(1, 10) - Poly::parse("t^3 + 0.35") * reg("g_thm13");
                 return std::pair{RationalFn(lhs), RationalFn(rhs)};
               }});
  v.push_back({"binomial_square", "(t+1)^2 = t^2 + 2t + 1", "sanity", [] {
                 const Poly a = Poly::parse("t + 1");
                 return std::pair{RationalFn(a * a), RationalFn(Poly::parse("t^2 + 2t + 1"))};
               }});
  return v;
}

}  // namespace

const std::vector<RegisteredIdentity>& identity_catalogue() {
  static const std::vector<RegisteredIdentity> identities = build();
  return identities;
}

IdentityResult verify_polynomial_identity(std::string_view name) {
  for (const auto& id : identity_catalogue()) {
    if (id.name != name) continue;
    const auto [lhs, rhs] = id.sides();
    return {id.name, lhs == rhs, lhs.to_string(), rhs.to_string(), id.location};
  }
  throw UnknownName("unknown identity: " + std::string(name));
}

VerificationReport verify_all_identities() {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.campaign = "identities_all";
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& id : identity_catalogue()) {
    const IdentityResult r = verify_polynomial_identity(id.name);
    ++report.checked;
    rows.push_back({{"name", r.name}, {"statement", id.statement}, {"holds", r.holds}, {"location", r.location}});
    if (!r.holds) report.add_counterexample({r.name, 0.0, 0.0, "lhs " + r.lhs + " != rhs " + r.rhs});
  }
  report.details["identities"] = rows;
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pb::verify
