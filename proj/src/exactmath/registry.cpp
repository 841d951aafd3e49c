#include "primebounds/exactmath/registry.hpp"

#include <algorithm>

#include "primebounds/error.hpp"

namespace pb::exact {

namespace {

BigRational q(std::string_view s) { return parse_rational(s); }

SignClaim on(ClaimKind kind, std::string_view lo, std::string_view hi = {}) {
  SignClaim c;
  c.kind = kind;
  c.lo = q(lo);
  if (!hi.empty()) c.hi = q(hi);
  return c;
}

SignClaim at_least(std::string_view reference, std::string_view lo, std::string_view hi = {}) {
  SignClaim c = on(ClaimKind::kAtLeast, lo, hi);
  c.reference = Poly::parse(reference);
  return c;
}

SignClaim value_at_most(std::string_view at, std::string_view value) {
  SignClaim c = on(ClaimKind::kValueAtMost, at);
  c.value = q(value);
  return c;
}

std::string range_text(const SignClaim& c) {
  return "[" + to_decimal(c.lo) + ", " + (c.hi ? to_decimal(*c.hi) + "]" : std::string("inf)"));
}

}  // namespace

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::kPositive: return "positive";
    case ClaimKind::kNonNegative: return "nonnegative";
    case ClaimKind::kNegative: return "negative";
    case ClaimKind::kAtLeast: return "at_least";
    case ClaimKind::kValueAtMost: return "value_at_most";
    case ClaimKind::kDerivativePositive: return "derivative_positive";
  }
  return "unknown";
}

std::string SignClaim::statement(std::string_view name) const {
  const std::string n(name);
  switch (kind) {
    case ClaimKind::kPositive: return n + "(t) > 0 on " + range_text(*this);
    case ClaimKind::kNonNegative: return n + "(t) >= 0 on " + range_text(*this);
    case ClaimKind::kNegative: return n + "(t) < 0 on " + range_text(*this);
    case ClaimKind::kAtLeast: return n + "(t) >= " + reference.to_string() + " on " + range_text(*this);
    case ClaimKind::kValueAtMost: return n + "(" + to_decimal(lo) + ") <= " + to_decimal(value);
    case ClaimKind::kDerivativePositive: return n + "'(t) > 0 on " + range_text(*this);
  }
  return n;
}

ClaimResult check_claim(const RegisteredPoly& entry, const SignClaim& claim) {
  ClaimResult r;
  r.poly = entry.name;
  r.statement = claim.statement(entry.name);
  switch (claim.kind) {
    case ClaimKind::kPositive:
      r.certificate = is_positive_on_interval(entry.poly, claim.lo, claim.hi);
      break;
    case ClaimKind::kNonNegative:
      r.certificate = is_nonneg_on_interval(entry.poly, claim.lo, claim.hi);
      break;
    case ClaimKind::kNegative:
      r.certificate = is_positive_on_interval(-entry.poly, claim.lo, claim.hi);
      break;
    case ClaimKind::kAtLeast:
      r.certificate = is_nonneg_on_interval(entry.poly - claim.reference, claim.lo, claim.hi);
      break;
    case ClaimKind::kDerivativePositive:
      r.certificate = is_positive_on_interval(entry.poly.derivative(), claim.lo, claim.hi);
      break;
    case ClaimKind::kValueAtMost: {
      const BigRational v = entry.poly.eval(claim.lo);
      r.value = to_decimal(v, 30);
      r.certificate.holds = v <= claim.value;
      r.certificate.sign_at_start = sgn(v);
      r.certificate.detail = "exact value " + r.value;
      break;
    }
  }
  r.holds = r.certificate.holds;
  return r;
}

void PolynomialRegistry::add(RegisteredPoly entry) {
  if (contains(entry.name)) throw Error("duplicate registry name: " + entry.name);
  entry.poly = Poly::parse(entry.expression);
  entries_.push_back(std::move(entry));
}

bool PolynomialRegistry::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.name == name; });
}

const RegisteredPoly& PolynomialRegistry::get(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw UnknownName("unknown polynomial: " + std::string(name));
}

std::vector<ClaimResult> PolynomialRegistry::check_all() const {
  std::vector<ClaimResult> out;
  for (const auto& e : entries_) {
    for (const auto& c : e.claims) out.push_back(check_claim(e, c));
  }
  return out;
}

nlohmann::json PolynomialRegistry::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : e.poly.coefficients()) coeffs.push_back(to_string(c));
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : e.claims) {
      claims.push_back({{"kind", to_string(c.kind)},
                        {"lo", to_string(c.lo)},
                        {"hi", c.hi ? nlohmann::json(to_string(*c.hi)) : nlohmann::json("inf")},
                        {"statement", c.statement(e.name)}});
    }
    nlohmann::json obj = {{"name", e.name},
                          {"expression", e.expression},
                          {"degree", e.poly.degree()},
                          {"coefficients", coeffs},
                          {"paper_location", e.location},
                          {"claims", claims}};
    if (!e.claims.empty()) {
      obj["threshold"] = to_string(e.claims.front().lo);
      obj["claimed_sign"] = std::string(to_string(e.claims.front().kind));
    } else {
      obj["threshold"] = nullptr;
      obj["claimed_sign"] = nullptr;
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

const PolynomialRegistry& PolynomialRegistry::builtin() {
  static const PolynomialRegistry registry = [] {
    PolynomialRegistry r;
    using K = ClaimKind;

    // Upper Panaitopol bound (n = 6): g is the cleared denominator t^6 * D(t).
    r.add({"g_thm13", "t^7 - t^6 - t^5 - 3.35t^4 - 12.65t^3 - 71.7t^2 - 466.1275t - 3489.8225", {},
           {on(K::kPositive, "3.804")}, "Theorem 1.3 proof"});
    r.add({"h_thm13",
           "29470t^10 + 11770t^9 + 39068t^8 + 164238t^7 + 712906t^6 + 3255002t^5 + 12190826t^4 + 88308t^3 "
           "+ 385090t^2 + 846526t - 12787805",
           {}, {on(K::kNonNegative, "1")}, "Theorem 1.3 proof, xi' - J' lower bound"});
    r.add({"r_thm13",
           "0.35t^11 - 1.75t^10 + 1.75t^9 - 0.6t^8 - 1.3t^7 - 29492t^6 - 11917t^5 - 40316t^4 - 155136t^3 "
           "- 717716t^2 - 3253405t - 12178862",
           {}, {on(K::kNonNegative, "10.9")}, "Theorem 1.3 proof, xi' - li' lower bound"});
    r.add({"s_thm13", "t^8 - 2t^7 - t^6 - 4.35t^5 - 19.35t^4 - 109.65t^3 - 752.9275t^2 - 5820.46t - 20938.935", {},
           {on(K::kNonNegative, "4.53"), value_at_most("4.52", "-433"), on(K::kDerivativePositive, "3.48"),
            on(K::kNegative, "3.804", "4.52")},
           "Theorem 1.3 proof, g^2 xi' / t^5"});

    // Lower Panaitopol bound (n = 6).
    r.add({"r_thm14",
           "28714t^10 + 11244t^9 + 36367t^8 + 146093t^7 + 691057t^6 + 3101649t^5 + 11572765t^4 - 77484t^3 "
           "- 365233t^2 - 799121t + 12169597",
           {}, {on(K::kNonNegative, "1")}, "Theorem 1.4 proof, J' - phi' lower bound"});
    r.add({"h_thm14", "-0.01t^15 + 0.39t^14 - 1.78t^13 + 1.763t^12 + 0.033t^11 - 2.997t^10", {},
           {on(K::kPositive, "23", "33"), at_least("0.443t^12 - 2.997t^10", "29", "33"),
            at_least("13.723t^12 - 2.997t^10", "23", "29")},
           "Theorem 1.4 proof, J'_{2,-0.01} - phi' lower bound"});
    r.add({"s_thm14", "t^8 - 2t^7 - t^6 - 3.65t^5 - 18.65t^4 - 110.35t^3 - 736.8275t^2 - 5682.56t - 20426.535", {},
           {on(K::kNonNegative, "4.6")}, "Theorem 1.4 proof, phi' numerator"});

    // Sum-form lower bound (n = 8) via the lower Panaitopol bound.
    r.add({"S_thm12", "t^7 - t^6 - t^5 - 2.65t^4 - 13.35t^3 - 70.3t^2 - 455.6275t - 3404.4225", {},
           {on(K::kPositive, "3.79")}, "Theorem 1.2 proof, y^6 S(y); also t^6 times the lower-bound denominator"});
    r.add({"R_thm12", "t^7 + t^6 + 2t^5 + 5.65t^4 + 23.65t^3 + 118.25t^2 + 709.5t + 4966.5", {},
           {on(K::kPositive, "0")}, "Theorem 1.2 proof, y^7 R(y)"});
    r.add({"T_thm12",
           "11017.9625t^6 + 19471.047875t^5 + 60956.6025t^4 + 250573.169t^3 + 1074985.621875t^2 "
           "+ 4678311.7425t + 16908064.34625",
           {}, {on(K::kPositive, "0")}, "Theorem 1.2 proof, T(y)"});
    r.add({"u_thm12", "t^8 - 0.35t^5 + 1.05t^4 - 39732", {}, {on(K::kNonNegative, "3.8")},
           "Theorem 1.2 proof, U' numerator"});

    // Short-interval theorem: y^9 g(y), compared with 0.056 y^9.
    r.add({"g_thm15",
           "0.0017t^11 - 2.3634t^10 - 1.1817t^9 - 5.707611t^8 - 9.051822t^7 - 1.39641489t^5 "
           "- 10.6965380574t^4 - 5.3482690287t^3 - 6.32004951121479",
           {}, {at_least("0.056t^9", "1423.728")}, "Theorem 1.5 proof, y^9 g(y)"});

    // Derivative numerators of the sum-form upper bound (n = 8).
    r.add({"delta_prime_thm11", "t^8 + 0.35t^5 - 1.05t^4 + 1687.9t - 54411.2", {},
           {on(K::kNonNegative, "3.85"), on(K::kNegative, "0", "3.8287")}, "Theorem 1.1 proof, t^9 delta'"});
    r.add({"eq316_num", "1687.9t - 54411.2", {}, {on(K::kNonNegative, "32.23619")},
           "Theorem 1.1 proof, delta' - J' numerator"});
    r.add({"thm11_li_num", "0.35t^5 - 1.05t^4 + 1687.9t - 54411.2", {}, {on(K::kNonNegative, "13.12")},
           "Theorem 1.1 proof, t^9 (delta' - li')"});
    return r;
  }();
  return registry;
}

}  // namespace pb::exact
