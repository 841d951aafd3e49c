#pragma once

#include <cstdint>

namespace pb::primes {
class PrimeCounter;
}

namespace pb::bounds {

/// alpha_n(x) obtained by solving the Panaitopol expansion truncated at n
/// for its last correction term, given pi(x):
/// (log^n x / k_n)(log x - 1 - sum_{i<n} k_i/log^i x - x/pi(x)) - 1.
/// Requires 1 <= n <= 6, x > 1 and pi_x > 0 (pb::DomainError otherwise).
double observed_alpha_from_pi(unsigned n, double x, double pi_x);

/// Same with the exact pi(x) from the sieve.
double observed_alpha(unsigned n, std::uint64_t x, const primes::PrimeCounter& counter);

}  // namespace pb::bounds
