#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "primebounds/primes/theta.hpp"

namespace pb::primes {

/// Default number of odd integers per sweep block (2^20 bits = 128 KiB).
inline constexpr std::uint64_t kDefaultSegmentBits = std::uint64_t{1} << 20;

/// Primality bitmap for [lo, hi] (inclusive). Bit k stands for the odd
/// integer first_odd() + 2k; the even prime 2 is tracked separately.
class PrimeBlock {
 public:
  PrimeBlock() = default;
  PrimeBlock(std::uint64_t lo, std::uint64_t hi);

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }
  std::uint64_t first_odd() const { return first_odd_; }
  std::uint64_t odd_count() const { return odd_count_; }
  const std::vector<std::uint64_t>& bitmap() const { return bits_; }

  bool is_prime(std::uint64_t n) const;
  std::uint64_t count() const;
  std::vector<std::uint64_t> primes() const;
  /// Kahan sum of log p over the primes of the block, in increasing order.
  ThetaValue theta() const;

  /// Calls visit(p) for each prime in increasing order until it returns false.
  /// Returns false if the visit was stopped early.
  template <typename Visit>
  bool for_each_prime(Visit&& visit) const {
    if (has_two_ && !visit(std::uint64_t{2})) return false;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        const int b = __builtin_ctzll(word);
        word &= word - 1;
        if (!visit(first_odd_ + 2 * (64 * w + static_cast<std::uint64_t>(b)))) return false;
      }
    }
    return true;
  }

 private:
  friend class Sieve;
  void clear_bit(std::uint64_t k) { bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::uint64_t first_odd_ = 1;
  std::uint64_t odd_count_ = 0;
  bool has_two_ = false;
  std::vector<std::uint64_t> bits_;
};

/// Per-block totals produced by a sweep.
struct BlockSummary {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t count = 0;
  ThetaValue theta;
};

/// Segmented sieve of Eratosthenes over odd integers up to a global limit.
///
/// Immutable after construction, so one instance can serve concurrent callers.
class Sieve {
 public:
  explicit Sieve(std::uint64_t limit, std::uint64_t segment_bits = kDefaultSegmentBits);

  std::uint64_t limit() const { return limit_; }
  std::uint64_t segment_bits() const { return segment_bits_; }
  /// Integers covered by one aligned sweep block.
  std::uint64_t block_span() const { return 2 * segment_bits_; }
  const std::vector<std::uint32_t>& base_primes() const { return base_primes_; }

  /// Marks exactly the primes in [lo, hi]. Throws pb::LimitExceeded past the
  /// limit, pb::DomainError when lo > hi, pb::ResourceError on allocation failure.
  PrimeBlock sieve_segment(std::uint64_t lo, std::uint64_t hi) const;

  /// Visits the aligned blocks covering [lo, hi] in increasing order. Blocks
  /// are sieved on up to `jobs` threads but always delivered in order; the
  /// visitor returns false to stop the sweep.
  void for_each_block(std::uint64_t lo, std::uint64_t hi, unsigned jobs,
                      const std::function<bool(const PrimeBlock&)>& visit) const;

  /// Count and theta of each aligned block in [lo, hi], computed in parallel
  /// and returned in block order.
  std::vector<BlockSummary> summarize(std::uint64_t lo, std::uint64_t hi, unsigned jobs) const;

 private:
  std::uint64_t limit_;
  std::uint64_t segment_bits_;
  std::vector<std::uint32_t> base_primes_;
};

/// floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);

}  // namespace pb::primes
