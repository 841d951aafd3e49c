#include "primebounds/verify/gaps.hpp"

#include <chrono>
#include <cmath>

#include "primebounds/bounds/constants.hpp"
#include "primebounds/error.hpp"
#include "primebounds/verify/compare.hpp"
#include "primebounds/verify/scans.hpp"

namespace pb::verify {

using exact::BigFloat;
using exact::BigInt;
using exact::BigRational;

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

const BigRational& pinned(std::string_view name) { return bounds::ProofConstants::builtin().value(name); }

BigRational integer(std::uint64_t v) { return BigRational(BigInt(v)); }

// p (1 + c/log^3 p) - q.
double gap_margin(std::uint64_t p, std::uint64_t q, double c) {
  const double t = std::log(static_cast<double>(p));
  return static_cast<double>(p) * (1.0 + c / (t * t * t)) - static_cast<double>(q);
}

BigFloat gap_margin_hp(std::uint64_t p, std::uint64_t q, const BigRational& c, unsigned bits) {
  const BigFloat x(BigInt(p), bits);
  const BigFloat t = exact::log(x);
  return x + x * BigFloat(c, bits) / (t * t * t) - BigFloat(BigInt(q), bits);
}

SignDecision decide_gap(std::uint64_t p, std::uint64_t q, const BigRational& c, double c_d) {
  return decide_sign(gap_margin(p, q, c_d), static_cast<double>(q),
                     [&](unsigned bits) { return gap_margin_hp(p, q, c, bits); });
}

}  // namespace

VerificationReport verify_gap_range(std::uint64_t n_lo, std::uint64_t n_hi, const BigRational& c,
                                    const primes::PrimeCounter& counter) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "gap_scan";
  if (n_lo == 0) throw DomainError("prime indices start at 1");
  if (c <= 0) throw DomainError("gap constant must be positive");
  report.details["index_range"] = {n_lo, n_hi};
  report.details["c"] = exact::to_decimal(c);
  if (n_lo > n_hi) {
    report.notes.push_back("empty index range");
    return report;
  }
  const double c_d = exact::to_double(c);
  std::uint64_t n = n_lo;
  std::uint64_t prev = 0;
  counter.for_each_prime(counter.nth_prime(n_lo), counter.limit(), [&](std::uint64_t p) {
    if (prev == 0) {
      prev = p;
      return true;
    }
    const SignDecision d = decide_gap(prev, p, c, c_d);
    report.escalations += d.escalations;
    ++report.checked;
    report.record_margin(static_cast<double>(prev), d.difference);
    if (d.sign <= 0) {
      if (report.counterexamples.size() < 25) {
        report.add_counterexample({std::to_string(prev), static_cast<double>(prev) + d.difference,
                                   static_cast<double>(p), "p_n (1 + c/log^3 p_n) <= p_{n+1}"});
      } else {
        report.status = Status::kFail;
      }
    }
    prev = p;
    return ++n <= n_hi;
  });
  if (n <= n_hi) throw LimitExceeded("p_" + std::to_string(n_hi + 1) + " lies beyond the sieve limit");
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport find_gap_violation_below(std::uint64_t n_start, const BigRational& c,
                                            const primes::PrimeCounter& counter, std::uint64_t max_steps) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "gap_downward";
  if (n_start < 2) {
    report.notes.push_back("nothing below index 1");
    return report;
  }
  const double c_d = exact::to_double(c);
  DescendingPrimes walk(counter.sieve(), counter.nth_prime(n_start));
  std::uint64_t next = walk.next();
  std::uint64_t n = n_start - 1;
  for (std::uint64_t step = 0; step < max_steps && n >= 1; ++step, --n) {
    const std::uint64_t p = walk.next();
    if (p == 0) break;
    const SignDecision d = decide_gap(p, next, c, c_d);
    report.escalations += d.escalations;
    ++report.checked;
    report.record_margin(static_cast<double>(p), d.difference);
    if (d.sign <= 0) {
      report.add_counterexample({std::to_string(p), static_cast<double>(p) + d.difference, static_cast<double>(next),
                                 "p_" + std::to_string(n) + " (1 + c/log^3 p_n) <= p_{n+1}"});
      report.details["violation_index"] = n;
      report.details["violation_prime"] = p;
      report.details["next_prime"] = next;
      break;
    }
    next = p;
  }
  if (report.counterexamples.empty()) report.notes.push_back("no violation found within the step cap");
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_gap_window(const primes::PrimeCounter& counter) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "gap_window";
  const BigRational& x0 = pinned("gap_start");
  const BigRational& x1 = pinned("gap_scan_start");
  const BigRational& pi_window = pinned("gap_window_pi");
  const BigRational& c = pinned("gap_c");
  const auto lo = static_cast<std::uint64_t>(exact::to_double(x0));
  const auto hi = static_cast<std::uint64_t>(exact::to_double(x1));

  const std::uint64_t pi_lo = counter.pi_of(lo);
  const std::uint64_t pi_hi = counter.pi_of(hi - 1);
  report.checked += 2;
  if (integer(pi_lo) != pi_window || integer(pi_hi) != pi_window) {
    report.add_counterexample({"[" + std::to_string(lo) + ", " + std::to_string(hi) + ")", static_cast<double>(pi_lo),
                               static_cast<double>(pi_hi), "pi is not constant at the pinned value"});
  }
  const BigRational log_hi = exact::log_enclosure(x0).hi;
  const BigRational reach = x0 + x0 * c / (log_hi * log_hi * log_hi);
  ++report.checked;
  report.record_margin(static_cast<double>(lo), exact::to_double(reach - x1));
  if (reach < x1) {
    report.add_counterexample({std::to_string(lo), exact::to_double(reach), exact::to_double(x1),
                               "x (1 + c/log^3 x) < next prime"});
  }
  report.details["pi_window"] = pi_lo;
  report.details["reach_at_start"] = exact::to_decimal(reach, 12);
  report.wall_ms = elapsed_ms(start);
  return report;
}

BigFloat lemma41_lower_bound(const BigRational& a, const BigRational& b, const BigFloat& c, const BigFloat& log_x) {
  const unsigned bits = std::max(c.precision(), log_x.precision());
  const BigFloat one(1L, bits);
  if (c < one) throw DomainError("c(x) must be at least 1");
  const BigFloat A(a, bits);
  const BigFloat B(b, bits);
  const BigFloat& L = log_x;
  const BigFloat lc = exact::log(c);
  const BigFloat Lc = L + lc;
  const BigFloat den_c = Lc - one - one / Lc - A / (Lc * Lc);
  const BigFloat den_x = L - one - one / L - B / (L * L);
  if (den_c.sign() <= 0 || den_x.sign() <= 0) {
    throw DenominatorNonPositive("Panaitopol denominator is not positive at log x = " + L.to_string(12));
  }
  const BigFloat L2 = L * L;
  const BigFloat first = (c - one) * (L - one - one / L) - lc - (c * lc + B * c - A) / L2;
  const BigFloat second = BigFloat(2L, bits) * B * c * lc / (L2 * L) + B * c * lc * lc / (L2 * L2);
  return exact::exp(L) * (first - second) / (den_c * den_x);
}

double lemma41_lower_bound(double a, double b, double c, double x) {
  if (!(x > 1.0)) throw DomainError("lemma bound needs x > 1");
  const BigFloat v = lemma41_lower_bound(exact::from_double(a), exact::from_double(b), BigFloat(c, 128),
                                         exact::log(BigFloat(x, 128)));
  return v.to_double();
}

BigFloat thm15_f(const BigFloat& log_x) {
  const unsigned bits = log_x.precision();
  const BigFloat one(1L, bits);
  const BigFloat& t = log_x;
  const BigFloat t2 = t * t;
  const BigFloat t3 = t2 * t;
  const BigFloat t4 = t2 * t2;
  const BigFloat c = one + BigFloat(pinned("gap_c"), bits) / t3;
  const BigFloat lc = exact::log(c);
  const BigFloat a(exact::parse_rational("2.65"), bits);
  const BigFloat b(exact::parse_rational("3.83"), bits);
  return (c - one) * (t4 * t - t4 - t3) - t4 * lc - (c * lc + b * c - a) * t2 - BigFloat(2L, bits) * b * c * lc * t -
         b * c * lc * lc;
}

VerificationReport verify_stitching_thm15(const BigRational& c) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = "stitching_thm15";
  nlohmann::json checks = nlohmann::json::array();
  auto record = [&](const std::string& name, const BigRational& lhs, const BigRational& rhs, const std::string& what) {
    ++report.checked;
    const bool ok = lhs <= rhs;
    checks.push_back({{"check", name}, {"statement", what}, {"lhs", exact::to_decimal(lhs, 15)},
                      {"rhs", exact::to_decimal(rhs, 15)}, {"holds", ok}});
    report.record_margin(static_cast<double>(report.checked), exact::to_double(rhs - lhs));
    if (!ok) report.add_counterexample({name, exact::to_double(lhs), exact::to_double(rhs), what});
  };

  const BigRational& kl_den = pinned("kadiri_lumley_den");
  const BigRational& kl_log = pinned("kadiri_lumley_log_start");
  const BigRational& rs_den = pinned("ramare_saouter_den");
  const BigRational& rs_start = pinned("ramare_saouter_start");
  const BigRational& tr_c = pinned("trudgian_c");
  const BigRational& tr_start = pinned("gap_scan_end");
  const BigRational& g_start = pinned("g_thm15_start");

  auto cube = [](const BigRational& v) { return BigRational(v * v * v); };
  record("kadiri_lumley", cube(g_start), BigRational(c * kl_den),
         "1/2442159713 <= c/log^3 x for log x <= 1423.728");
  record("ramare_saouter", cube(kl_log), BigRational(c * rs_den), "1/28313999 <= c/log^3 x for log x <= 150");
  const BigRational log_rs_hi = exact::log_enclosure(rs_start).hi;
  record("trudgian", log_rs_hi, BigRational(tr_c * c), "1/(111 log^2 x) <= c/log^3 x for x <= 10726905041");
  record("chain_trudgian_ramare_saouter", tr_start, rs_start, "2898239 <= 10726905041");
  record("chain_ramare_saouter_kadiri_lumley", log_rs_hi, kl_log, "log 10726905041 <= 150");
  record("chain_kadiri_lumley_lemma", kl_log, g_start, "150 <= 1423.728");
  record("lemma_start", exact::log_enclosure(pinned("z3_2.65")).hi, g_start, "log z_3(2.65) <= 1423.728");

  if (c > 0) {
    const BigFloat root = exact::cbrt(BigFloat(BigRational(c * kl_den), 256));
    report.details["cube_root_kadiri_lumley"] = root.to_string(12);
    report.details["cube_root_ramare_saouter"] = exact::cbrt(BigFloat(BigRational(c * rs_den), 256)).to_string(12);
  }
  report.details["trudgian_crossover"] = exact::to_decimal(BigRational(tr_c * c), 12);
  report.details["c"] = exact::to_decimal(c);
  report.details["checks"] = std::move(checks);
  report.axioms_used = {"prime in (x, x(1 + 1/2442159713)] for x >= e^150",
                        "prime in (x, x(1 + 1/28313999)] for x >= 10726905041",
                        "prime in (x, x(1 + 1/(111 log^2 x))] for x >= 2898239"};
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_stitching_thm15() { return verify_stitching_thm15(pinned("gap_c")); }

}  // namespace pb::verify
