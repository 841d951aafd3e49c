#pragma once

#include <cstdint>

#include "primebounds/exactmath/bigfloat.hpp"
#include "primebounds/primes/prime_source.hpp"
#include "primebounds/verify/report.hpp"

namespace pb::verify {

/// p_n (1 + c/log^3 p_n) > p_{n+1} for n_lo <= n <= n_hi. Throws
/// pb::LimitExceeded when p_{n_hi+1} lies beyond the sieve and
/// pb::DomainError unless c > 0 and n_lo >= 1.
VerificationReport verify_gap_range(std::uint64_t n_lo, std::uint64_t n_hi, const exact::BigRational& c,
                                    const primes::PrimeCounter& counter);

/// Walks n = n_start - 1, n_start - 2, ... and stops at the first n with
/// p_n (1 + c/log^3 p_n) <= p_{n+1}. Fails exactly when one is found.
VerificationReport find_gap_violation_below(std::uint64_t n_start, const exact::BigRational& c,
                                            const primes::PrimeCounter& counter,
                                            std::uint64_t max_steps = 10'000'000);

/// On [58837, 58889): pi stays at 5949 and x (1 + 1.1817/log^3 x) >= 58889,
/// checked at x = 58837 with a rigorous upper bound for log 58837 (the map
/// x (1 + c/log^3 x) is increasing for log x >= 3).
VerificationReport verify_gap_window(const primes::PrimeCounter& counter);

/// The two-line lower bound for pi(c x) - pi(x) from the short-interval lemma,
/// with x = e^{log_x} and c >= 1. Throws pb::DenominatorNonPositive when
/// either Panaitopol denominator is <= 0 and pb::DomainError when c < 1.
exact::BigFloat lemma41_lower_bound(const exact::BigRational& a, const exact::BigRational& b, const exact::BigFloat& c,
                                    const exact::BigFloat& log_x);
double lemma41_lower_bound(double a, double b, double c, double x);

/// f from the gap theorem's proof at c = 1 + 1.1817/t^3, a = 2.65, b = 3.83,
/// as a function of t = log x.
exact::BigFloat thm15_f(const exact::BigFloat& log_x);

/// The regime coverage arithmetic of the gap theorem for gap constant c:
/// 1/2442159713 <= c/log^3 x up to log x = 1423.728, 1/28313999 <= c/log^3 x
/// up to log x = 150, and 1/(111 log^2 x) <= c/log^3 x up to x = 10726905041,
/// plus the chaining of the regime endpoints. Exact rationals throughout.
VerificationReport verify_stitching_thm15(const exact::BigRational& c);
VerificationReport verify_stitching_thm15();

}  // namespace pb::verify
