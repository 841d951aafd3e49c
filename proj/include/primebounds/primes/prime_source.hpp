#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "primebounds/primes/checkpoint.hpp"
#include "primebounds/primes/sieve.hpp"
#include "primebounds/primes/theta.hpp"

namespace pb::primes {

struct PrimeConfig {
  /// Global sieve limit; every query beyond it raises pb::LimitExceeded.
  std::uint64_t limit = 1'500'000'000;
  std::uint64_t segment_bits = kDefaultSegmentBits;
  unsigned jobs = 1;
};

/// Exact pi(x), theta(x) and p_n up to the configured limit.
///
/// Queries start from the nearest checkpoint at or below the target (or from
/// zero without checkpoints) and sieve the remaining tail. All methods are
/// const and safe to call concurrently.
class PrimeCounter {
 public:
  explicit PrimeCounter(PrimeConfig config = {}, CheckpointTable checkpoints = {});

  const PrimeConfig& config() const { return config_; }
  const Sieve& sieve() const { return *sieve_; }
  const CheckpointTable& checkpoints() const { return checkpoints_; }
  std::uint64_t limit() const { return config_.limit; }

  std::uint64_t pi_of(std::uint64_t x) const;
  ThetaValue theta_of(std::uint64_t x) const;
  /// pi and theta from a single sweep.
  Checkpoint pi_theta_of(std::uint64_t x) const;

  /// The n-th prime, p_1 = 2. Throws pb::DomainError for n = 0.
  std::uint64_t nth_prime(std::uint64_t n) const;

  /// Visits the primes of [lo, hi] in increasing order until visit returns false.
  void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<bool(std::uint64_t)>& visit) const;
  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;
  /// Smallest prime strictly greater than x.
  std::uint64_t next_prime_after(std::uint64_t x) const;
  /// Largest prime <= x, or 0 when x < 2.
  std::uint64_t prev_prime_at_most(std::uint64_t x) const;

 private:
  void check_limit(std::uint64_t x) const;

  PrimeConfig config_;
  std::shared_ptr<const Sieve> sieve_;
  CheckpointTable checkpoints_;
};

}  // namespace pb::primes
