#pragma once

#include <cstdint>
#include <string>

#include "primebounds/bounds/bound.hpp"
#include "primebounds/primes/prime_source.hpp"
#include "primebounds/verify/report.hpp"

namespace pb::verify {

/// Where a bound is certified increasing: d/dx bound >= 0 for log x >= t_mono.
struct MonotoneCertificate {
  exact::BigRational t_start;
  exact::BigRational t_mono;
  std::string detail;

  bool from_start() const { return t_mono == t_start; }
};

/// Certifies bound' >= 0 on [t_start, inf) from the exact derivative. When the
/// derivative changes sign beyond t_start, t_mono is a rational just above its
/// last sign change (isolated by Sturm bisection to width 2^-20). Throws
/// pb::MonotonicityUnverified if no such start can be certified and
/// pb::DenominatorSignIndeterminate if the derivative's denominator vanishes
/// beyond t_mono.
MonotoneCertificate certify_monotone(const bounds::BoundSpec& spec, const exact::BigRational& t_start);

struct ScanOptions {
  /// Lower scans: require pi(p_i) > bound(p_{i+1}) instead of >=.
  bool strict = false;
  /// Stop recording after this many counterexamples (the scan still finishes).
  std::size_t max_counterexamples = 25;
};

/// bound(p_i) > i for i_lo <= i <= i_hi, after certifying monotonicity from
/// log p_{i_lo}. If the certificate only starts at t_mono > log p_{i_lo}, the
/// bound is additionally checked at e^{t_mono} against pi(e^{t_mono}).
VerificationReport verify_upper_at_primes(const bounds::BoundSpec& spec, std::uint64_t i_lo, std::uint64_t i_hi,
                                          const primes::PrimeCounter& counter, const ScanOptions& options = {});

/// i >= bound(p_{i+1}) (or > with options.strict) for i_lo <= i <= i_hi.
VerificationReport verify_lower_at_primes(const bounds::BoundSpec& spec, std::uint64_t i_lo, std::uint64_t i_hi,
                                          const primes::PrimeCounter& counter, const ScanOptions& options = {});

/// Walks primes downward from index i_start - 1 and stops at the first index
/// whose interval [p_i, p_{i+1}) contains a point violating the bound:
/// bound(p_i) <= i for upper bounds, bound(p_{i+1}) > i for lower bounds.
/// Gives up after max_steps indices. The report fails exactly when a
/// violation was found.
VerificationReport find_violation_below(const bounds::BoundSpec& spec, std::uint64_t i_start,
                                        const primes::PrimeCounter& counter,
                                        std::uint64_t max_steps = 10'000'000);

/// bound(x) > pi(x) (upper) or bound(x) < pi(x) (lower) at `samples` random
/// composite integers of [x_lo, x_hi], drawn with a fixed seed.
VerificationReport spot_check(const bounds::BoundSpec& spec, std::uint64_t x_lo, std::uint64_t x_hi,
                              std::size_t samples, const primes::PrimeCounter& counter, std::uint64_t seed = 1);

/// bound(x) > pi(x) for every real x with log x in [t_lo, t_hi], by cutting
/// the range into steps of width `step` in t. On [t_a, t_b] the bound is at
/// least e^{t_a} Q(t_b) (sum form, Q(t) = sum c_i/t^i) or e^{t_a}/D(t_b)
/// (Panaitopol form), and pi(x) <= pi(floor(e^{t_b})). Needs nonnegative
/// coefficients so that Q decreases and D increases; throws
/// pb::MonotonicityUnverified otherwise and pb::DenominatorNonPositive when D
/// is not positive at t_lo.
VerificationReport verify_upper_by_log_sweep(const bounds::BoundSpec& spec, const exact::BigRational& t_lo,
                                             const exact::BigRational& t_hi, const exact::BigRational& step,
                                             const primes::PrimeCounter& counter);

/// Downward iteration over primes, largest first.
class DescendingPrimes {
 public:
  /// Starts with the largest prime <= x.
  DescendingPrimes(const primes::Sieve& sieve, std::uint64_t x);
  /// Next prime in decreasing order, or 0 once the primes are exhausted.
  std::uint64_t next();

 private:
  void refill();
  const primes::Sieve& sieve_;
  std::uint64_t window_hi_;
  bool exhausted_ = false;
  std::vector<std::uint64_t> buffer_;
};

}  // namespace pb::verify
