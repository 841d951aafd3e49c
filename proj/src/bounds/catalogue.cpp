#include "primebounds/bounds/catalogue.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "primebounds/error.hpp"
#include "primebounds/primes/prime_source.hpp"

namespace pb::bounds {

namespace {

using exact::parse_rational;

std::vector<BigRational> rationals(std::initializer_list<const char*> texts) {
  std::vector<BigRational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

BoundSpec sum_bound(std::string name, Direction dir, Threshold th, std::initializer_list<const char*> c,
                    std::string location) {
  return {std::move(name), dir, std::move(th), std::move(location), SumBound{rationals(c)}};
}

BoundSpec panaitopol_bound(std::string name, Direction dir, Threshold th, std::initializer_list<const char*> a,
                           std::string location) {
  return {std::move(name), dir, std::move(th), std::move(location), PanaitopolBound{1, rationals(a)}};
}

Threshold at(const char* x) { return {parse_rational(x), false}; }
Threshold at_log(const char* t) { return {parse_rational(t), true}; }

struct Cor311Row {
  const char* a;
  const char* b;
  const char* c;
  const char* d;
  const char* x0;
};

constexpr Cor311Row kCor311[] = {
    {"2.65", "13.35", "70.3", "276", "1245750347"}, {"2.65", "13.35", "70.3", "69", "909050897"},
    {"2.65", "13.35", "45", "0", "768338551"},      {"2.65", "13.35", "34", "0", "547068751"},
    {"2.65", "13.35", "5", "0", "374123969"},       {"2.65", "13.1", "0", "0", "235194097"},
    {"2.65", "11.6", "0", "0", "166219973"},        {"2.65", "8.6", "0", "0", "93811339"},
    {"2.65", "7.7", "0", "0", "65951927"},          {"2.65", "4.6", "0", "0", "38168363"},
    {"2.62", "0", "0", "0", "16590551"},            {"2.1", "0", "0", "0", "6690557"},
    {"1", "0", "0", "0", "1772201"},                {"0", "0", "0", "0", "468049"},
};

BoundSpec pinned_j(std::string name, unsigned k, const char* eta, std::uint64_t x1, std::uint64_t pi_x1,
                   primes::ThetaValue theta, std::string location) {
  JSpec j{k, parse_rational(eta), x1, pi_x1, theta};
  validate_jspec(j);
  const Direction dir = exact::sign(j.eta) > 0 ? Direction::kUpper : Direction::kLower;
  return {std::move(name), dir, Threshold{BigRational(exact::BigInt(x1)), false}, std::move(location), j};
}

std::vector<BoundSpec> build() {
  std::vector<BoundSpec> v;
  v.push_back(sum_bound("t101", Direction::kUpper, at("1"),
                        {"1", "1", "2", "6.35", "24.35", "121.75", "730.5", "6801.4"}, "Theorem 1.1"));
  v.push_back(sum_bound("t102", Direction::kLower, at("1332450001"),
                        {"1", "1", "2", "5.65", "23.65", "118.25", "709.5", "4966.5"}, "Theorem 1.2"));
  v.push_back(panaitopol_bound("t103", Direction::kUpper, at_log("3.804"),
                               {"1", "3.35", "12.65", "71.7", "466.1275", "3489.8225"}, "Theorem 1.3"));
  v.push_back(panaitopol_bound("t104", Direction::kLower, at("1332479531"),
                               {"1", "2.65", "13.35", "70.3", "455.6275", "3404.4225"}, "Theorem 1.4"));
  v.push_back(sum_bound("dusart308", Direction::kUpper, at("2953652287"), {"1", "1", "2.334"},
                        "Dusart upper bound, section 3"));
  v.push_back(sum_bound("dusart309", Direction::kLower, at("88783"), {"1", "1", "2"},
                        "Dusart lower bound, section 3"));
  v.push_back(panaitopol_bound("cor39_a", Direction::kUpper, at("21.95"), {"1", "3.35", "12.65", "89.6"},
                               "Corollary 3.9"));
  v.push_back(panaitopol_bound("cor39_b", Direction::kUpper, at("14.36"), {"1", "3.35", "15.43"}, "Corollary 3.9"));
  v.push_back(panaitopol_bound("cor39_c", Direction::kUpper, at("9.25"), {"1", "3.83"}, "Corollary 3.9"));
  v.push_back(panaitopol_bound("cor39_d", Direction::kUpper, at("5.43"), {"1.17"}, "Corollary 3.9"));
  int row = 1;
  for (const Cor311Row& r : kCor311) {
    v.push_back(panaitopol_bound("cor311_" + std::to_string(row), Direction::kLower, at(r.x0),
                                 {"1", r.a, r.b, r.c, r.d}, "Corollary 3.11 row " + std::to_string(row)));
    ++row;
  }
  v.push_back(sum_bound("U_thm12", Direction::kLower, at("1332450001"),
                        {"1", "1", "2", "5.65", "23.65", "118.25", "709.5", "4966.5"}, "Theorem 1.2 proof"));
  v.push_back({"li", Direction::kUpper, at("2"), "section 2 (valid below the Skewes lower bound)", LiBound{}});

  const primes::ThetaValue theta_1e14{99999990573246.5, 0.5};
  v.push_back(pinned_j("J_3_0.35_1e14", 3, "0.35", 100000000000000, 3204941750802, theta_1e14,
                       "Theorem 1.1 proof"));
  v.push_back(pinned_j("J_3_-0.35_1e14", 3, "-0.35", 100000000000000, 3204941750802, theta_1e14,
                       "Theorem 1.4 proof"));
  // Only the upper end of theta(8e9) is pinned, which is the end a lower envelope uses.
  v.push_back(pinned_j("J_2_-0.01_8e9", 2, "-0.01", 8000000000, 367783654, {7999890793.0, 0.0},
                       "Theorem 1.4 proof"));
  return v;
}

std::vector<std::string> coefficient_strings(const std::vector<BigRational>& c) {
  std::vector<std::string> out;
  for (const auto& v : c) out.push_back(exact::to_decimal(v, 30));
  return out;
}

}  // namespace

const BoundCatalogue& BoundCatalogue::builtin() {
  static const BoundCatalogue catalogue = [] {
    BoundCatalogue c;
    c.entries_ = build();
    return c;
  }();
  return catalogue;
}

const BoundSpec& BoundCatalogue::get(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw UnknownName("unknown bound: " + std::string(name));
}

bool BoundCatalogue::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const BoundSpec& e) { return e.name == name; });
}

nlohmann::json to_json(const BoundSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["shape"] = to_string(spec.shape());
  j["direction"] = to_string(spec.direction);
  j["threshold"] = spec.threshold.text();
  j["paper_location"] = spec.location;
  if (const auto* s = std::get_if<SumBound>(&spec.form)) {
    j["coefficients"] = coefficient_strings(s->coefficients);
  } else if (const auto* p = std::get_if<PanaitopolBound>(&spec.form)) {
    std::vector<BigRational> all{p->a0};
    all.insert(all.end(), p->a.begin(), p->a.end());
    j["coefficients"] = coefficient_strings(all);
  } else if (const auto* jj = std::get_if<JSpec>(&spec.form)) {
    j["coefficients"] = nlohmann::json{{"k", jj->k},
                                       {"eta", exact::to_decimal(jj->eta)},
                                       {"x1", jj->x1},
                                       {"pi_x1", jj->pi_x1},
                                       {"theta_x1_lower", jj->theta_x1.lower()},
                                       {"theta_x1_upper", jj->theta_x1.upper()}};
  } else {
    j["coefficients"] = nlohmann::json::array();
  }
  return j;
}

nlohmann::json BoundCatalogue::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries_) out.push_back(bounds::to_json(e));
  return out;
}

BoundSpec desk_j_bound(unsigned k, const BigRational& eta, std::uint64_t x1, const primes::PrimeCounter& counter) {
  const primes::Checkpoint anchor = counter.pi_theta_of(x1);
  JSpec j{k, eta, x1, anchor.pi, anchor.theta};
  validate_jspec(j);
  const Direction dir = exact::sign(eta) > 0 ? Direction::kUpper : Direction::kLower;
  return {"J_" + std::to_string(k) + "_" + exact::to_decimal(eta) + "_" + std::to_string(x1), dir,
          Threshold{BigRational(exact::BigInt(x1)), false}, "Proposition 3.4 at desk scale", j};
}

}  // namespace pb::bounds
