#include <doctest.h>
#include <mpfr.h>

#include <cmath>
#include <numbers>

#include "primebounds/bounds/bounds.hpp"
#include "primebounds/error.hpp"
#include "primebounds/exactmath/exactmath.hpp"
#include "primebounds/primes/primes.hpp"

using namespace pb::bounds;
using pb::exact::BigFloat;
using pb::exact::BigInt;
using pb::exact::BigRational;
using pb::exact::parse_rational;
using pb::exact::Poly;
using pb::exact::RationalFn;

namespace {

const BoundCatalogue& cat() { return BoundCatalogue::builtin(); }

// Ei(log x) straight from MPFR.
double mpfr_li(double x, unsigned bits = 200) {
  mpfr_t v;
  mpfr_init2(v, bits);
  mpfr_set_d(v, x, MPFR_RNDN);
  mpfr_log(v, v, MPFR_RNDN);
  mpfr_eint(v, v, MPFR_RNDN);
  const double out = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return out;
}

// Coefficients of 1/sum_{i>=0} i! s^i = 1 - s - sum_n k_n s^{n+1}.
std::vector<BigInt> series_inverse_oracle(unsigned n) {
  std::vector<BigInt> a(n + 2), inv(n + 2);
  a[0] = 1;
  for (unsigned i = 1; i < a.size(); ++i) a[i] = a[i - 1] * i;
  inv[0] = 1;
  for (unsigned m = 1; m < inv.size(); ++m) {
    BigInt acc = 0;
    for (unsigned j = 1; j <= m; ++j) acc += a[j] * inv[m - j];
    inv[m] = -acc;
  }
  std::vector<BigInt> k;
  for (unsigned m = 2; m < inv.size(); ++m) k.push_back(-inv[m]);
  return k;
}

double phi_t104(double x) { return eval_bound(cat().get("t104"), x); }

}  // namespace

TEST_CASE("panaitopol coefficients") {
  CHECK(panaitopol_coefficients(1) == std::vector<BigInt>{1});
  CHECK(panaitopol_coefficients(2) == std::vector<BigInt>{1, 3});
  // The recurrence gives k_6 = 3447; the series-inversion oracle agrees.
  CHECK(panaitopol_coefficients(6) == std::vector<BigInt>{1, 3, 13, 71, 461, 3447});
  CHECK(panaitopol_coefficients(5) == std::vector<BigInt>{1, 3, 13, 71, 461});
  CHECK(panaitopol_coefficients(0).empty());
  CHECK(panaitopol_coefficients(30) == series_inverse_oracle(30));
}

TEST_CASE("sum-form evaluation") {
  const double e = std::numbers::e;
  CHECK(eval_bound(cat().get("t101"), e) == doctest::Approx(7688.35 * e).epsilon(1e-12));
  CHECK(eval_bound(cat().get("t102"), e) == doctest::Approx(5827.55 * e).epsilon(1e-12));
  CHECK(eval_bound(cat().get("t101"), 1e6) > 78498);
  CHECK_THROWS_AS(eval_bound(cat().get("t101"), 1.0), pb::DomainError);
  CHECK_THROWS_AS(eval_bound(cat().get("t101"), 0.5), pb::DomainError);
}

TEST_CASE("panaitopol-form evaluation") {
  const auto& t103 = std::get<PanaitopolBound>(cat().get("t103").form);
  const BigRational d10 = panaitopol_denominator_poly(t103).eval(BigRational(10)) / pb::exact::pow(BigRational(10), 6);
  CHECK(d10 == parse_rational("8.8385289025"));
  const double x = std::exp(10.0);
  CHECK(eval_bound(cat().get("t103"), x) == doctest::Approx(x / 8.8385289025).epsilon(1e-12));
  CHECK_THROWS_AS(eval_bound(cat().get("t104"), std::exp(3.0)), pb::DenominatorNonPositive);
  CHECK(eval_bound(cat().get("cor39_d"), 1e6) > 78498);
  CHECK(eval_bound(cat().get("cor311_14"), 1e6) < 78498);
}

TEST_CASE("li against an independent exponential integral") {
  CHECK(eval_li(2.0) == doctest::Approx(1.0451637801174927848).epsilon(1e-13));
  CHECK(eval_li(4.0) > eval_li(3.0));
  CHECK_THROWS_AS(eval_li(1.0), pb::DomainError);
  CHECK_THROWS_AS(eval_li(0.3), pb::DomainError);
  for (double x : {1.2, 1.45, 1.46, 2.5, 10.0, 1e3, 1e6, 5e5, 1.4e9, 1e14, 1e21, std::exp(49.9), std::exp(50.5),
                   std::exp(80.0), std::exp(300.0)}) {
    const double oracle = mpfr_li(x);
    CHECK(std::fabs(eval_li(x) - oracle) <= 1e-13 * std::fabs(oracle) + 1e-15);
  }
  const BigFloat hp = eval_li(BigFloat(1e14, 200));
  mpfr_t v;
  mpfr_init2(v, 240);
  mpfr_set_d(v, 1e14, MPFR_RNDN);
  mpfr_log(v, v, MPFR_RNDN);
  mpfr_eint(v, v, MPFR_RNDN);
  mpfr_sub(v, v, hp.get(), MPFR_RNDN);
  mpfr_abs(v, v, MPFR_RNDN);
  CHECK(mpfr_get_d(v, MPFR_RNDN) < 1e-40);
  mpfr_clear(v);
}

TEST_CASE("paper li gaps") {
  CHECK(eval_bound(cat().get("t101"), 5e5) - eval_li(5e5, 1e-13) >= 2.4);
  CHECK(eval_bound(cat().get("t103"), 140000) - eval_li(140000, 1e-13) > 0.0024);
}

TEST_CASE("J evaluation") {
  const BoundSpec& up = cat().get("J_3_0.35_1e14");
  const BoundSpec& lo = cat().get("J_3_-0.35_1e14");
  const auto& j = std::get<JSpec>(up.form);
  const double x1 = 1e14;
  const double t1 = std::log(x1);
  const double expected = 3204941750802.0 - 99999990573246.0 / t1 + x1 / t1 + 0.35 * x1 / std::pow(t1, 4);
  CHECK(eval_J(j, x1) == doctest::Approx(expected).epsilon(1e-15));
  CHECK_THROWS_AS(eval_J(j, 9e13), pb::DomainError);
  for (double x : {1.0000001e14, 2e14, 1e16, 1e20}) CHECK(eval_bound(up, x) - eval_bound(lo, x) > 0);

  const double x2 = 8e9;
  CHECK(eval_bound(cat().get("J_2_-0.01_8e9"), x2) - phi_t104(x2) >= 2360);
}

TEST_CASE("J integral reduction matches quadrature") {
  // Simpson's rule on log t as variable: int dt/log^m t = int e^u / u^m du.
  for (unsigned m : {2U, 3U, 5U}) {
    const double a = std::log(1e9);
    const double b = std::log(1.4e9);
    const int n = 2000;
    const double h = (b - a) / n;
    double s = 0;
    for (int i = 0; i <= n; ++i) {
      const double u = a + i * h;
      const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
      s += w * std::exp(u) / std::pow(u, m);
    }
    s *= h / 3;
    const double reduced = log_power_antiderivative(m, 1.4e9) - log_power_antiderivative(m, 1e9);
    CHECK(reduced == doctest::Approx(s).epsilon(1e-9));
  }
}

TEST_CASE("J table constraint") {
  CHECK_NOTHROW(validate_jspec({3, parse_rational("0.35"), 100000000000000, 0, {}}));
  CHECK_NOTHROW(validate_jspec({1, parse_rational("-0.001"), 1000000000, 0, {}}));
  CHECK_THROWS_AS(validate_jspec({3, parse_rational("0.35"), 1000000000, 0, {}}), pb::DomainError);
  CHECK_THROWS_AS(validate_jspec({5, parse_rational("0.35"), 100000000000000, 0, {}}), pb::DomainError);
  CHECK_THROWS_AS(validate_jspec({1, parse_rational("0.002"), 1000000000, 0, {}}), pb::DomainError);
  CHECK_THROWS_AS(validate_jspec({2, parse_rational("0.01"), 7713133852, 0, {}}), pb::DomainError);
  // ceil(e^30) is the table entry used for the 0.35 row.
  const BigFloat e30 = pb::exact::exp(BigFloat(30L, 200));
  CHECK(e30 > BigFloat(BigInt(10686474581524UL), 200));
  CHECK(e30 < BigFloat(BigInt(10686474581525UL), 200));
}

TEST_CASE("exact derivatives") {
  const RationalFn d101 = bound_derivative_in_t(cat().get("t101"));
  const RationalFn dj = bound_derivative_in_t(cat().get("J_3_0.35_1e14"));
  const RationalFn dli = bound_derivative_in_t(cat().get("li"));
  CHECK(d101 - dj == RationalFn(Poly::parse("1687.9t - 54411.2"), Poly::monomial(1, 9)));
  CHECK(d101 - dli ==
        RationalFn(Poly::parse("0.35t^5 - 1.05t^4 + 1687.9t - 54411.2"), Poly::monomial(1, 9)));
  CHECK(bound_derivative_in_t(cat().get("U_thm12")) ==
        RationalFn(Poly::parse("t^8 - 0.35t^5 + 1.05t^4 - 39732"), Poly::monomial(1, 9)));
  CHECK(dli == RationalFn(Poly::constant(1), Poly::t()));
}

TEST_CASE("symbolic derivative agrees with finite differences") {
  for (const BoundSpec& spec : cat().entries()) {
    const RationalFn r = bound_derivative_in_t(spec);
    double t_lo = std::max(5.0, spec.threshold.log_x() + 0.01);
    const double t_hi = std::max(40.0, t_lo + 10);
    for (int i = 0; i < 20; ++i) {
      const double t = t_lo + (t_hi - t_lo) * i / 19.0;
      const double x = std::exp(t);
      const double h = x * 1e-5;
      const double fd = (eval_bound(spec, x + h) - eval_bound(spec, x - h)) / (2 * h);
      const double sym = r.eval(t);
      INFO(spec.name << " t=" << t);
      CHECK(std::fabs(fd - sym) <= 1e-6 * std::fabs(sym));
    }
  }
}

TEST_CASE("sum and panaitopol forms agree asymptotically") {
  const double x = 1e30;
  const double a = eval_bound(cat().get("t101"), x);
  const double b = eval_bound(cat().get("t103"), x);
  CHECK(std::fabs(a - b) / b < 1e-3);
}

TEST_CASE("high precision evaluators agree with double") {
  for (const BoundSpec& spec : cat().entries()) {
    const double x = std::max(1e15, spec.threshold.x() * 1.5);
    const double d = eval_bound(spec, x);
    const double hp = eval_bound_hp(spec, BigFloat(x, 160)).to_double();
    INFO(spec.name);
    CHECK(hp == doctest::Approx(d).epsilon(1e-11));
  }
  CHECK_THROWS_AS(eval_bound_hp(cat().get("t104"), BigFloat(std::exp(3.0), 128)), pb::DenominatorNonPositive);
}

TEST_CASE("observed alpha") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto k = panaitopol_coefficients(n);
    for (double x : {1e5, 1e8, 1e12}) {
      const double t = std::log(x);
      double den = t - 1;
      for (unsigned i = 1; i <= n; ++i) den -= k[i - 1].get_d() / std::pow(t, i);
      CHECK(std::fabs(observed_alpha_from_pi(n, x, x / den)) < 1e-6);
    }
  }
  pb::primes::PrimeConfig cfg;
  cfg.limit = 100'000'000;
  const pb::primes::PrimeCounter counter(cfg);
  const double t = std::log(1e6);
  CHECK(observed_alpha(1, 1'000'000, counter) == doctest::Approx(t * (t - 1 - 1e6 / 78498.0) - 1).epsilon(1e-12));
  // alpha_1 is not monotone in x: it is about 0.0082 at 1e5 and 0.178 at 1e8.
  const double t5 = std::log(1e5);
  const double t8 = std::log(1e8);
  CHECK(observed_alpha(1, 100'000, counter) == doctest::Approx(t5 * (t5 - 1 - 1e5 / 9592.0) - 1).epsilon(1e-12));
  CHECK(observed_alpha(1, 100'000'000, counter) ==
        doctest::Approx(t8 * (t8 - 1 - 1e8 / 5761455.0) - 1).epsilon(1e-12));
  CHECK_THROWS_AS(observed_alpha_from_pi(7, 1e6, 78498), pb::DomainError);
  CHECK_THROWS_AS(observed_alpha(1, 1, counter), pb::DomainError);
}

TEST_CASE("catalogue completeness and export") {
  for (const char* name : {"t101", "t102", "t103", "t104", "dusart308", "dusart309", "cor39_a", "cor39_b", "cor39_c",
                           "cor39_d", "U_thm12", "li"}) {
    CHECK(cat().contains(name));
  }
  for (int i = 1; i <= 14; ++i) CHECK(cat().contains("cor311_" + std::to_string(i)));
  CHECK_THROWS_AS(cat().get("t999"), pb::UnknownName);
  CHECK(cat().get("t102").direction == Direction::kLower);
  CHECK(cat().get("t103").threshold.text() == "x >= e^3.804");
  CHECK(cat().get("cor311_1").threshold.text() == "x >= 1245750347");

  const nlohmann::json j = cat().to_json();
  REQUIRE(j.is_array());
  for (const auto& e : j) {
    for (const char* key : {"name", "shape", "coefficients", "direction", "threshold", "paper_location"}) {
      CHECK(e.contains(key));
    }
  }
  const auto& t103 = j[2];
  CHECK(t103["shape"] == "panaitopol");
  CHECK(t103["coefficients"][6] == "3489.8225");
}

TEST_CASE("pinned constants") {
  const ProofConstants& c = ProofConstants::builtin();
  CHECK(c.value("K1_upper") == BigRational(BigInt(102839438084UL)));
  CHECK(c.value("K1_lower") == BigRational(BigInt(102838475779UL)));
  CHECK(c.value("pi_1e14") == BigRational(BigInt(3204941750802UL)));
  CHECK(c.value("theta_1e14_lower") == BigRational(BigInt(99999990573246UL)));
  CHECK(c.value("theta_1e14_upper") == BigRational(BigInt(99999990573247UL)));
  CHECK(c.value("pi_8e9") == 367783654);
  CHECK(c.value("theta_8e9_upper") == BigRational(BigInt(7999890793UL)));
  CHECK(c.value("z1_2.65") == 36917641);
  CHECK(c.value("z3_2.65") == 36909396);
  CHECK(c.value("z2_3.83") == 10);
  CHECK(c.value("skewes_lower") == BigRational(BigInt(100000000000000UL)));
  CHECK_THROWS_AS(c.get("nope"), pb::UnknownName);
  CHECK(c.to_json().size() == c.entries().size());
}

TEST_CASE("desk-scale J envelopes bracket pi") {
  pb::primes::PrimeConfig cfg;
  cfg.limit = 1'400'000'000;
  cfg.jobs = 2;
  const pb::primes::PrimeCounter counter(cfg);
  const std::uint64_t x1 = 1'000'000'000;
  const BoundSpec upper = desk_j_bound(1, parse_rational("0.001"), x1, counter);
  const BoundSpec lower = desk_j_bound(1, parse_rational("-0.001"), x1, counter);
  const auto& uj = std::get<JSpec>(upper.form);
  CHECK(uj.pi_x1 == 50847534);

  std::uint64_t pi = uj.pi_x1;
  int checked = 0;
  counter.sieve().for_each_block(x1 + 1, cfg.limit, cfg.jobs, [&](const pb::primes::PrimeBlock& b) {
    pi += b.count();
    const double x = static_cast<double>(b.hi());
    CHECK(eval_bound(lower, x) < static_cast<double>(pi));
    CHECK(static_cast<double>(pi) < eval_bound(upper, x));
    ++checked;
    return true;
  });
  CHECK(checked > 100);
  CHECK_THROWS_AS(desk_j_bound(1, parse_rational("0.001"), 900'000'000, counter), pb::DomainError);
}
