#include <doctest.h>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "primebounds/bounds/catalogue.hpp"
#include "primebounds/error.hpp"
#include "primebounds/exactmath/rational.hpp"
#include "primebounds/primes/prime_source.hpp"
#include "primebounds/verify/campaigns.hpp"
#include "primebounds/verify/crossover.hpp"
#include "primebounds/verify/eq312.hpp"
#include "primebounds/verify/gaps.hpp"
#include "primebounds/verify/identities.hpp"
#include "primebounds/verify/inequalities.hpp"
#include "primebounds/verify/pinned.hpp"
#include "primebounds/verify/scans.hpp"

using namespace pb;
using namespace pb::verify;
using exact::parse_rational;

namespace {

const primes::PrimeCounter& counter() {
  static const primes::PrimeCounter c([] {
    primes::PrimeConfig cfg;
    cfg.limit = 3'000'000;
    return cfg;
  }());
  return c;
}

const bounds::BoundSpec& spec(const char* name) { return bounds::BoundCatalogue::builtin().get(name); }

// x/t * sum c_i / t^i in long double, written out here.
long double sum_form(const std::vector<long double>& c, long double t) {
  long double s = 0, p = 1;
  for (long double ci : c) {
    s += ci / p;
    p *= t;
  }
  return std::exp(t) / t * s;
}

double bisect_log(const std::function<long double(long double)>& f, double lo, double hi) {
  long double flo = f(lo);
  for (int k = 0; k < 80; ++k) {
    const double mid = 0.5 * (lo + hi);
    const long double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::uint64_t trial_pi(std::uint64_t x) {
  std::uint64_t n = 0;
  for (std::uint64_t k = 2; k <= x; ++k) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= k; ++d)
      if (k % d == 0) {
        prime = false;
        break;
      }
    n += prime;
  }
  return n;
}

}  // namespace

TEST_CASE("report bookkeeping") {
  VerificationReport r;
  r.record_margin(5.0, 0.5);
  r.record_margin(3.0, 0.5);
  r.record_margin(9.0, 0.7);
  CHECK(r.worst_margin.x == 3.0);
  CHECK(r.passed());
  r.add_counterexample({"17", 1.0, 2.0, ""});
  CHECK(r.status == Status::kFail);
  CHECK(r.exit_code() == 1);

  VerificationReport a, b;
  a.checked = 2;
  b.checked = 3;
  b.mark_indeterminate("tight");
  a.merge(b);
  CHECK(a.checked == 5);
  CHECK(a.status == Status::kIndeterminate);
  CHECK(a.exit_code() == 3);
}

TEST_CASE("upper scan campaigns at desk scale") {
  const auto t101 = run_campaign("t101_primescan", counter());
  CHECK(t101.passed());
  CHECK(t101.checked > trial_pi(1000));
  const auto t103 = run_campaign("t103_primescan", counter());
  CHECK(t103.passed());
  CHECK(t103.details["ceil_e_4.53"] == 93);
  CHECK(static_cast<std::uint64_t>(std::ceil(std::exp(4.53))) == 93);
}

TEST_CASE("scan edge cases") {
  const auto empty = verify_upper_at_primes(spec("t101"), 20, 19, counter());
  CHECK(empty.passed());
  CHECK(empty.checked == 0);

  // The catalogued threshold 88783 is too small: at x = 88783 the bound is 8596.04 > pi(x) = 8596.
  const long double t0 = std::log(88783.0L);
  CHECK(sum_form({1, 1, 2}, t0) > trial_pi(88783));
  const auto literal = verify_lower_at_primes(spec("dusart309"), counter().pi_of(88783), counter().pi_of(2'000'000),
                                              counter());
  CHECK(literal.status == Status::kFail);
  CHECK(literal.counterexamples.size() == 1);
  const auto lower = verify_lower_at_primes(spec("dusart309"), counter().pi_of(88789), counter().pi_of(2'000'000),
                                            counter());
  CHECK(lower.passed());

  // The upper bound only holds from its threshold on; below it a violation exists.
  const auto below = find_violation_below(spec("dusart308"), counter().pi_of(2'000'000), counter());
  CHECK(below.status == Status::kFail);
  const std::uint64_t i = below.details["violation_index"];
  const std::uint64_t p = below.details["violation_prime"];
  CHECK(counter().pi_of(p) == i);
  const long double t = std::log(static_cast<long double>(p));
  CHECK(sum_form({1, 1, 2.334L}, t) <= static_cast<long double>(i) + 1e-6L);
}

TEST_CASE("eq312 log-space sums") {
  const auto r = verify_eq312();
  CHECK(r.passed());
  CHECK(r.checked == 102);
  const double mx = r.details["max_sum"];
  CHECK(mx >= 0.31);
  CHECK(mx < 0.35);
  // The eps term dominates; the exponential terms are below 1e-700.
  CHECK(mx == doctest::Approx(6.93e-12 * std::pow(3676.0, 3)).epsilon(1e-12));

  const auto row0 = eq312_sum(0, parse_rational("6.93e-12"), parse_rational("0.35"));
  CHECK(row0.below);
  CHECK(row0.sum == doctest::Approx(6.93e-12 * std::pow(3601.0, 3)).epsilon(1e-12));

  CHECK_FALSE(verify_eq312(parse_rational("0.32")).passed());
}

TEST_CASE("crossover of t101 and dusart308") {
  const auto c = find_crossover("t101", "dusart308", std::exp(20.0), std::exp(25.0));
  const std::vector<long double> a{1, 1, 2, 6.35L, 24.35L, 121.75L, 730.5L, 6801.4L};
  const std::vector<long double> b{1, 1, 2.334L};
  const double oracle = bisect_log([&](long double t) { return sum_form(a, t) - sum_form(b, t); }, 20.0, 25.0);
  CHECK(c.log_x == doctest::Approx(oracle).epsilon(1e-6));
  CHECK(std::abs(c.log_x - 23.11) <= 0.01);
  CHECK(c.sign_above < 0);
  CHECK(verify_crossover_t101_dusart308().passed());

  CHECK_THROWS_AS(find_crossover("t101", "t101", std::exp(20.0), std::exp(25.0)), NoSignChange);
  CHECK_THROWS_AS(find_crossover("t101", "li", std::exp(12.0), std::exp(14.0)), NoSignChange);
  CHECK_THROWS_AS(find_crossover("t101", "dusart308", 1.0, 10.0), DomainError);
}

TEST_CASE("prime gap checks") {
  const auto c = parse_rational("1.1817");
  const auto range = verify_gap_range(counter().pi_of(58889), counter().pi_of(2'898'239) + 1, c, counter());
  CHECK(range.passed());

  // p_1 = 2: 2 (1 + 1/log^3 2) = 7.99 > 3.
  CHECK(verify_gap_range(1, 1, parse_rational("1"), counter()).passed());

  const auto down = find_gap_violation_below(counter().pi_of(58889), c, counter());
  CHECK(down.status == Status::kFail);
  const std::uint64_t p = down.details["violation_prime"];
  CHECK(p < 58837);
  CHECK(p == 58831);
  CHECK(down.details["next_prime"] == 58889);
  CHECK(58831.0 * (1 + 1.1817 / std::pow(std::log(58831.0), 3)) <= 58889.0);

  CHECK(verify_gap_window(counter()).passed());
  CHECK_THROWS_AS(verify_gap_range(1, 2, parse_rational("0"), counter()), DomainError);
}

TEST_CASE("short-interval lemma and stitching") {
  // Never above the direct difference c x / D_a(c x) - x / D_b(x).
  for (double c : {1.0, 1.01, 1.5}) {
    const long double x = 1e6L, L = std::log(x), Lc = std::log(c * x);
    const auto D = [](long double u, long double a) { return u - 1 - 1 / u - a / (u * u); };
    const long double direct = c * x / D(Lc, 2.65L) - x / D(L, 3.83L);
    CHECK(lemma41_lower_bound(2.65, 3.83, c, 1e6) <= direct + 1e-6L * std::abs(direct));
  }
  CHECK(lemma41_lower_bound(1.0, 1.0, 1.0, 1e6) == 0.0);
  CHECK(lemma41_lower_bound(2.65, 3.83, 1.0, 1e6) < 0);
  CHECK_THROWS_AS(lemma41_lower_bound(1.0, 1.0, 0.5, 1e6), DomainError);
  const exact::BigFloat big(1500.0, 256), small(100.0, 256);
  CHECK(thm15_f(big).to_double() > 0);
  CHECK(thm15_f(small).to_double() < 0);

  const auto st = verify_stitching_thm15();
  CHECK(st.passed());
  CHECK(std::cbrt(1.1817L * 2442159713.0L) >= 1423.728L);
  CHECK(st.details["trudgian_crossover"] == "131.1687");
  CHECK_FALSE(verify_stitching_thm15(parse_rational("0")).passed());
}

TEST_CASE("pinned constants are consistent") {
  const auto r = verify_pinned_constants();
  CHECK(r.passed());
  CHECK(r.checked >= 10);
  CHECK_FALSE(r.axioms_used.empty());
}

TEST_CASE("identities and inequalities") {
  CHECK(verify_all_identities().passed());
  CHECK_THROWS_AS(verify_polynomial_identity("no_such_identity"), UnknownName);

  // The literal statement has the wrong sign; the reversed one holds.
  CHECK(verify_named_inequality("eq318").status == Status::kFail);
  CHECK(verify_named_inequality("eq318_reversed").passed());
  CHECK(verify_named_inequality("eq319").passed());

  const exact::RationalFn inv_t(exact::Poly({1}), exact::Poly({0, 1}));
  const exact::RationalFn zero(exact::Poly({0}), exact::Poly({1}));
  CHECK(verify_rational_inequality(inv_t, zero, parse_rational("1")).holds);
  CHECK_FALSE(verify_rational_inequality(zero, inv_t, parse_rational("1")).holds);
}

TEST_CASE("positivity claims") {
  const auto r = verify_positivity_claims();
  CHECK(r.passed());
  CHECK(r.checked >= 11);
  CHECK_THROWS_AS(verify_positivity_claims("no_such_poly"), UnknownName);
}

TEST_CASE("reports are deterministic") {
  const auto a = run_campaign("thm15_gap", counter()).to_json(false).dump();
  const auto b = run_campaign("thm15_gap", counter()).to_json(false).dump();
  CHECK(a == b);
  CHECK(run_campaign("eq312", counter()).to_json(false) == run_campaign("eq312", counter()).to_json(false));
}

TEST_CASE("campaign presets") {
  CHECK_THROWS_AS(campaign_preset("nope"), UnknownName);
  CHECK(campaign_preset("t104_primescan").extended);
  CHECK_THROWS_AS(run_campaign("t102_boundary", counter()), DomainError);
  const auto d = describe_campaign("thm15_gap");
  CHECK(d["campaign"] == "thm15_gap");
  CHECK(run_campaign("inequalities_all", counter()).status == Status::kFail);
  for (const char* id : {"identities_all", "positivity_all", "stitching_thm15", "constants", "crossover"})
    CHECK_MESSAGE(run_campaign(id, counter()).passed(), id);
}
