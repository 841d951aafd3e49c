#include "primebounds/verify/scans.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "primebounds/error.hpp"
#include "primebounds/exactmath/sturm.hpp"
#include "primebounds/verify/compare.hpp"

namespace pb::verify {

using bounds::BoundSpec;
using bounds::Direction;
using exact::BigFloat;
using exact::BigRational;
using exact::Poly;

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// d/dx bound >= 0 on [t, inf) given the canonical derivative num/den.
bool derivative_nonneg_from(const Poly& num, const Poly& den, const BigRational& t, std::string& detail) {
  if (den.sign_at(t) == 0 || (den.degree() > 0 && exact::sturm_count_roots(den, t) != 0)) {
    throw DenominatorSignIndeterminate("derivative denominator vanishes beyond t = " + exact::to_decimal(t));
  }
  const Poly oriented = den.sign_at(t) > 0 ? num : -num;
  const exact::SignCertificate cert = exact::is_nonneg_on_ray(oriented, t);
  detail = cert.detail;
  return cert.holds;
}

// Cauchy bound: every real root of p is below it.
BigRational root_bound(const Poly& p) {
  BigRational m = 0;
  const BigRational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigRational(abs(p.coeff(i)) / lead));
  return m + 1;
}

BigFloat hp_bound_minus(const BoundSpec& spec, std::uint64_t x, const BigRational& rhs, unsigned bits) {
  return bounds::eval_bound_hp(spec, BigFloat(exact::BigInt(x), bits)) - BigFloat(rhs, bits);
}

}  // namespace

MonotoneCertificate certify_monotone(const BoundSpec& spec, const BigRational& t_start) {
  const exact::RationalFn r = bounds::bound_derivative_in_t(spec);
  MonotoneCertificate out{t_start, t_start, {}};
  if (r.num().is_zero()) {
    out.detail = "derivative vanishes identically";
    return out;
  }
  std::string detail;
  try {
    if (derivative_nonneg_from(r.num(), r.den(), t_start, detail)) {
      out.detail = detail;
      return out;
    }
  } catch (const DenominatorSignIndeterminate&) {
    // fall through to locating the last sign change
  }
  Poly critical = r.num() * r.den();
  const BigRational far = std::max(root_bound(critical), BigRational(t_start + 1));
  if (exact::sturm_count_roots(critical, t_start, far) == 0) {
    throw MonotonicityUnverified(spec.name + ": derivative is negative on [" + exact::to_decimal(t_start) + ", inf)");
  }
  BigRational lo = t_start;
  BigRational hi = far;
  const BigRational width(1, 1 << 20);
  while (hi - lo > width) {
    const BigRational mid = (lo + hi) / 2;
    if (exact::sturm_count_roots(critical, mid, far) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!derivative_nonneg_from(r.num(), r.den(), hi, detail)) {
    throw MonotonicityUnverified(spec.name + ": derivative is not nonnegative beyond t = " + exact::to_decimal(hi));
  }
  out.t_mono = hi;
  out.detail = detail;
  return out;
}

VerificationReport verify_upper_at_primes(const BoundSpec& spec, std::uint64_t i_lo, std::uint64_t i_hi,
                                          const primes::PrimeCounter& counter, const ScanOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = spec.name + "_upper_scan";
  if (spec.direction != Direction::kUpper) throw DomainError(spec.name + " is not an upper bound");
  if (i_lo == 0) throw DomainError("prime indices start at 1");
  if (i_lo > i_hi) {
    report.notes.push_back("empty index range");
    return report;
  }
  const std::uint64_t p_lo = counter.nth_prime(i_lo);
  const MonotoneCertificate mono =
      certify_monotone(spec, exact::log_enclosure(BigRational(exact::BigInt(p_lo))).lo);
  report.details["monotone_from_log_x"] = exact::to_decimal(mono.t_mono, 12);
  report.details["index_range"] = {i_lo, i_hi};

  auto check = [&](double x_d, std::uint64_t x_int, std::uint64_t i, const std::string& at,
                   const std::function<BigFloat(unsigned)>& hp) {
    const double value = bounds::eval_bound(spec, x_d);
    const double diff = value - static_cast<double>(i);
    const SignDecision d = decide_sign(diff, static_cast<double>(i), hp);
    report.escalations += d.escalations;
    ++report.checked;
    report.record_margin(static_cast<double>(x_int), d.difference);
    if (d.sign <= 0 && report.counterexamples.size() < options.max_counterexamples) {
      report.add_counterexample({at, value, static_cast<double>(i), "bound(p_i) <= i"});
    } else if (d.sign <= 0) {
      report.status = Status::kFail;
    }
  };

  if (!mono.from_start()) {
    // The prime interval containing e^{t_mono} is covered from e^{t_mono} on.
    const BigFloat x_mono = exact::exp(BigFloat(mono.t_mono, 256));
    const auto floor_x = static_cast<std::uint64_t>(std::floor(x_mono.to_double()));
    const std::uint64_t i_mono = counter.pi_of(floor_x);
    report.notes.push_back("monotone only from x = e^" + exact::to_decimal(mono.t_mono, 12) +
                           "; coverage of [p_" + std::to_string(i_lo) + ", e^t) rests on the per-prime checks only");
    if (i_mono >= i_lo && i_mono <= i_hi) {
      const double xm = x_mono.to_double();
      const double value = bounds::eval_bound(spec, xm);
      const SignDecision d = decide_sign(value - static_cast<double>(i_mono), static_cast<double>(i_mono),
                                         [&](unsigned bits) {
                                           const BigFloat x = exact::exp(BigFloat(mono.t_mono, bits));
                                           return bounds::eval_bound_hp(spec, x) -
                                                  BigFloat(static_cast<long>(i_mono), bits);
                                         });
      report.escalations += d.escalations;
      ++report.checked;
      report.record_margin(xm, d.difference);
      if (d.sign <= 0) report.add_counterexample({"e^" + exact::to_decimal(mono.t_mono, 12), value,
                                                  static_cast<double>(i_mono), "bound(e^t_mono) <= pi"});
    }
  }

  std::uint64_t i = i_lo;
  counter.for_each_prime(p_lo, counter.limit(), [&](std::uint64_t p) {
    if (i > i_hi) return false;
    check(static_cast<double>(p), p, i, std::to_string(p), [&](unsigned bits) {
      return hp_bound_minus(spec, p, BigRational(exact::BigInt(i)), bits);
    });
    ++i;
    return true;
  });
  if (i <= i_hi) throw LimitExceeded("p_" + std::to_string(i_hi) + " lies beyond the sieve limit");
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_lower_at_primes(const BoundSpec& spec, std::uint64_t i_lo, std::uint64_t i_hi,
                                          const primes::PrimeCounter& counter, const ScanOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = spec.name + "_lower_scan";
  if (spec.direction != Direction::kLower) throw DomainError(spec.name + " is not a lower bound");
  if (i_lo == 0) throw DomainError("prime indices start at 1");
  if (i_lo > i_hi) {
    report.notes.push_back("empty index range");
    return report;
  }
  const std::uint64_t p_lo = counter.nth_prime(i_lo);
  const MonotoneCertificate mono =
      certify_monotone(spec, exact::log_enclosure(BigRational(exact::BigInt(p_lo))).lo);
  report.details["monotone_from_log_x"] = exact::to_decimal(mono.t_mono, 12);
  report.details["index_range"] = {i_lo, i_hi};
  if (!mono.from_start()) {
    report.notes.push_back("monotone only from x = e^" + exact::to_decimal(mono.t_mono, 12));
  }

  std::uint64_t i = i_lo;
  bool first = true;
  counter.for_each_prime(p_lo, counter.limit(), [&](std::uint64_t p) {
    if (first) {
      first = false;
      return true;  // p = p_{i_lo}; its successor is the first comparison point
    }
    if (i > i_hi) return false;
    const double value = bounds::eval_bound(spec, static_cast<double>(p));
    const double diff = static_cast<double>(i) - value;
    const SignDecision d = decide_sign(diff, static_cast<double>(i), [&](unsigned bits) {
      return -hp_bound_minus(spec, p, BigRational(exact::BigInt(i)), bits);
    });
    report.escalations += d.escalations;
    ++report.checked;
    report.record_margin(static_cast<double>(p), d.difference);
    const bool ok = options.strict ? d.sign > 0 : d.sign >= 0;
    if (!ok) {
      if (report.counterexamples.size() < options.max_counterexamples) {
        report.add_counterexample({"index " + std::to_string(i) + ", p_{i+1} = " + std::to_string(p),
                                   static_cast<double>(i), value,
                                   options.strict ? "pi(p_i) <= bound(p_{i+1})" : "pi(p_i) < bound(p_{i+1})"});
      } else {
        report.status = Status::kFail;
      }
    }
    ++i;
    return true;
  });
  if (i <= i_hi) throw LimitExceeded("p_" + std::to_string(i_hi + 1) + " lies beyond the sieve limit");
  report.wall_ms = elapsed_ms(start);
  return report;
}

DescendingPrimes::DescendingPrimes(const primes::Sieve& sieve, std::uint64_t x) : sieve_(sieve), window_hi_(x) {
  refill();
}

void DescendingPrimes::refill() {
  while (buffer_.empty() && !exhausted_) {
    const std::uint64_t span = sieve_.block_span();
    const std::uint64_t lo = window_hi_ >= span ? window_hi_ - span + 1 : 0;
    buffer_ = sieve_.sieve_segment(lo, window_hi_).primes();
    if (lo == 0) {
      exhausted_ = true;
    } else {
      window_hi_ = lo - 1;
    }
  }
}

std::uint64_t DescendingPrimes::next() {
  refill();
  if (buffer_.empty()) return 0;
  const std::uint64_t p = buffer_.back();
  buffer_.pop_back();
  return p;
}

VerificationReport find_violation_below(const BoundSpec& spec, std::uint64_t i_start,
                                        const primes::PrimeCounter& counter, std::uint64_t max_steps) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = spec.name + "_downward";
  if (i_start < 2) {
    report.notes.push_back("nothing below index 1");
    return report;
  }
  const std::uint64_t p_start = counter.nth_prime(i_start);
  DescendingPrimes walk(counter.sieve(), p_start);
  std::uint64_t upper = walk.next();  // p_{i_start}
  std::uint64_t i = i_start - 1;
  for (std::uint64_t step = 0; step < max_steps && i >= 1; ++step, --i) {
    const std::uint64_t p = walk.next();
    if (p == 0) break;
    ++report.checked;
    const bool upper_bound = spec.direction == Direction::kUpper;
    const std::uint64_t at = upper_bound ? p : upper;
    const auto x = static_cast<double>(at);
    if (!upper_bound || x > 1) {
      double value;
      try {
        value = bounds::eval_bound(spec, x);
      } catch (const DomainError&) {
        report.add_counterexample({std::to_string(at), static_cast<double>(i), 0.0, "bound undefined"});
        break;
      }
      const double margin = upper_bound ? value - static_cast<double>(i) : static_cast<double>(i) - value;
      report.record_margin(x, margin);
      const bool violated = upper_bound ? value <= static_cast<double>(i) : value > static_cast<double>(i);
      if (violated) {
        std::ostringstream note;
        if (upper_bound) {
          note << "pi(" << p << ") = " << i << " >= bound";
        } else {
          note << "pi(x) = " << i << " < bound(x) for x just below " << upper << " (interval starts at p = " << p
               << ")";
        }
        report.add_counterexample({std::to_string(upper_bound ? p : upper - 1), static_cast<double>(i), value,
                                   note.str()});
        report.details["violation_index"] = i;
        report.details["violation_prime"] = p;
        break;
      }
    }
    upper = p;
  }
  if (report.counterexamples.empty()) report.notes.push_back("no violation found within the step cap");
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_upper_by_log_sweep(const BoundSpec& spec, const BigRational& t_lo, const BigRational& t_hi,
                                             const BigRational& step, const primes::PrimeCounter& counter) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = spec.name + "_log_sweep";
  if (spec.direction != Direction::kUpper) throw DomainError(spec.name + " is not an upper bound");
  if (step <= 0 || t_lo <= 0) throw DomainError("log sweep needs t_lo > 0 and a positive step");

  // Lower bound of the bound on [t_a, t_b] divided by e^{t_a}.
  std::function<BigRational(const BigRational&)> factor;
  if (const auto* s = std::get_if<bounds::SumBound>(&spec.form)) {
    for (const auto& c : s->coefficients) {
      if (c < 0) throw MonotonicityUnverified(spec.name + ": negative coefficient");
    }
    factor = [s](const BigRational& t) {
      BigRational q = 0;
      BigRational power = 1;
      for (const auto& c : s->coefficients) {
        power /= t;
        q += c * power;
      }
      return q;
    };
  } else if (const auto* p = std::get_if<bounds::PanaitopolBound>(&spec.form)) {
    for (const auto& a : p->a) {
      if (a < 0) throw MonotonicityUnverified(spec.name + ": negative denominator coefficient");
    }
    const exact::RationalFn d = bounds::panaitopol_denominator_fn(*p);
    if (d.eval(t_lo) <= 0) throw DenominatorNonPositive(spec.name + ": denominator not positive at the sweep start");
    factor = [d](const BigRational& t) { return BigRational(1 / d.eval(t)); };
  } else {
    throw MonotonicityUnverified(spec.name + ": log sweep needs a sum or Panaitopol form");
  }

  for (BigRational a = t_lo; a < t_hi; a += step) {
    const BigRational b = std::min(BigRational(a + step), t_hi);
    const BigFloat ea = exact::exp(BigFloat(a, 128), MPFR_RNDD);
    const BigFloat eb = exact::exp(BigFloat(b, 128), MPFR_RNDU);
    // Two roundings to nearest at 128 bits; the 2^-100 shave absorbs them.
    const BigFloat raw = ea * BigFloat(factor(b), 128, MPFR_RNDD);
    const BigFloat lower = raw - raw * BigFloat(std::ldexp(1.0, -100), 128);
    const auto x_hi = static_cast<std::uint64_t>(std::floor(eb.to_double() * (1 + 1e-15)));
    const std::uint64_t pi_hi = counter.pi_of(x_hi);
    const double margin = lower.to_double() - static_cast<double>(pi_hi);
    ++report.checked;
    report.record_margin(exact::to_double(a), margin);
    if (!(lower > BigFloat(static_cast<long>(pi_hi), 128))) {
      report.add_counterexample({"log x in [" + exact::to_decimal(a, 8) + ", " + exact::to_decimal(b, 8) + "]",
                                 lower.to_double(), static_cast<double>(pi_hi), "lower envelope <= pi"});
    }
  }
  report.details["log_range"] = {exact::to_decimal(t_lo, 10), exact::to_decimal(t_hi, 10)};
  report.details["step"] = exact::to_decimal(step);
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport spot_check(const BoundSpec& spec, std::uint64_t x_lo, std::uint64_t x_hi, std::size_t samples,
                              const primes::PrimeCounter& counter, std::uint64_t seed) {
  const auto start = Clock::now();
  VerificationReport report;
  report.campaign = spec.name + "_spot_check";
  if (x_lo > x_hi) return report;
  const std::uint64_t base = x_lo == 0 ? 0 : counter.pi_of(x_lo - 1);
  const std::vector<std::uint64_t> ps = counter.primes_in(x_lo, x_hi);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(x_lo, x_hi);
  std::size_t drawn = 0;
  for (std::size_t attempts = 0; drawn < samples && attempts < 20 * samples; ++attempts) {
    const std::uint64_t x = pick(rng);
    if (std::binary_search(ps.begin(), ps.end(), x)) continue;
    ++drawn;
    const auto pi = base + static_cast<std::uint64_t>(std::upper_bound(ps.begin(), ps.end(), x) - ps.begin());
    const double value = bounds::eval_bound(spec, static_cast<double>(x));
    const double margin =
        spec.direction == Direction::kUpper ? value - static_cast<double>(pi) : static_cast<double>(pi) - value;
    ++report.checked;
    report.record_margin(static_cast<double>(x), margin);
    if (margin <= 0) report.add_counterexample({std::to_string(x), value, static_cast<double>(pi), "spot check"});
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace pb::verify
