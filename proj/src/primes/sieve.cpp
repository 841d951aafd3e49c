#include "primebounds/primes/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <new>
#include <string>

#include "primebounds/error.hpp"

namespace pb::primes {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

PrimeBlock::PrimeBlock(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {
  first_odd_ = lo | 1;
  odd_count_ = hi >= first_odd_ ? (hi - first_odd_) / 2 + 1 : 0;
  has_two_ = lo <= 2 && hi >= 2;
  try {
    bits_.assign((odd_count_ + 63) / 64, ~std::uint64_t{0});
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate a prime bitmap for [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (const std::uint64_t tail = odd_count_ % 64; tail != 0) bits_.back() = (std::uint64_t{1} << tail) - 1;
  if (odd_count_ > 0 && first_odd_ == 1) clear_bit(0);
}

bool PrimeBlock::is_prime(std::uint64_t n) const {
  if (n < lo_ || n > hi_) return false;
  if (n == 2) return has_two_;
  if (n % 2 == 0) return false;
  const std::uint64_t k = (n - first_odd_) / 2;
  return (bits_[k >> 6] >> (k & 63)) & 1;
}

std::uint64_t PrimeBlock::count() const {
  std::uint64_t c = has_two_ ? 1 : 0;
  for (auto w : bits_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return c;
}

std::vector<std::uint64_t> PrimeBlock::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(count());
  for_each_prime([&](std::uint64_t p) {
    out.push_back(p);
    return true;
  });
  return out;
}

ThetaValue PrimeBlock::theta() const {
  ThetaAccumulator acc;
  for_each_prime([&](std::uint64_t p) {
    acc.add_log_of(p);
    return true;
  });
  return acc.result();
}

Sieve::Sieve(std::uint64_t limit, std::uint64_t segment_bits) : limit_(limit), segment_bits_(segment_bits) {
  if (segment_bits_ < 64 || segment_bits_ % 64 != 0) throw DomainError("segment size must be a positive multiple of 64 bits");
  const std::uint64_t root = isqrt(limit_) + 1;
  std::vector<char> composite(root + 1, 0);
  for (std::uint64_t i = 3; i * i <= root; i += 2) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) composite[j] = 1;
  }
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!composite[i]) base_primes_.push_back(static_cast<std::uint32_t>(i));
  }
}

PrimeBlock Sieve::sieve_segment(std::uint64_t lo, std::uint64_t hi) const {
  if (lo > hi) throw DomainError("sieve_segment requires lo <= hi");
  if (hi > limit_) {
    throw LimitExceeded("sieve range ends at " + std::to_string(hi) + ", beyond the configured limit " +
                        std::to_string(limit_));
  }
  PrimeBlock block(lo, hi);
  if (block.odd_count_ == 0) return block;
  const std::uint64_t first = block.first_odd_;
  const std::uint64_t n = block.odd_count_;
  for (std::uint32_t p32 : base_primes_) {
    const std::uint64_t p = p32;
    if (p * p > hi) break;
    std::uint64_t start = p * p;
    if (start < first) {
      start = ((first + p - 1) / p) * p;
      if (start % 2 == 0) start += p;
    }
    for (std::uint64_t k = (start - first) / 2; k < n; k += p) block.clear_bit(k);
  }
  return block;
}

void Sieve::for_each_block(std::uint64_t lo, std::uint64_t hi, unsigned jobs,
                           const std::function<bool(const PrimeBlock&)>& visit) const {
  if (lo > hi) return;
  if (hi > limit_) {
    throw LimitExceeded("sweep ends at " + std::to_string(hi) + ", beyond the configured limit " + std::to_string(limit_));
  }
  const std::uint64_t span = block_span();
  jobs = std::max(1U, jobs);
  std::uint64_t next = lo;
  while (true) {
    // Aligned blocks [k*span, (k+1)*span - 1] clipped to [lo, hi].
    std::vector<std::pair<std::uint64_t, std::uint64_t>> batch;
    while (batch.size() < jobs && next <= hi) {
      const std::uint64_t end = std::min(hi, (next / span + 1) * span - 1);
      batch.emplace_back(next, end);
      if (end == hi) {
        next = hi + 1;
        break;
      }
      next = end + 1;
    }
    if (batch.empty()) return;
    if (batch.size() == 1) {
      if (!visit(sieve_segment(batch[0].first, batch[0].second))) return;
    } else {
      std::vector<std::future<PrimeBlock>> futures;
      futures.reserve(batch.size());
      for (const auto& [a, b] : batch) {
        futures.push_back(std::async(std::launch::async, [this, a = a, b = b] { return sieve_segment(a, b); }));
      }
      for (auto& f : futures) {
        if (!visit(f.get())) {
          for (auto& rest : futures) {
            if (rest.valid()) rest.wait();
          }
          return;
        }
      }
    }
    if (next > hi) return;
  }
}

std::vector<BlockSummary> Sieve::summarize(std::uint64_t lo, std::uint64_t hi, unsigned jobs) const {
  std::vector<BlockSummary> out;
  if (lo > hi) return out;
  if (hi > limit_) {
    throw LimitExceeded("count ends at " + std::to_string(hi) + ", beyond the configured limit " + std::to_string(limit_));
  }
  const std::uint64_t span = block_span();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  for (std::uint64_t a = lo;;) {
    const std::uint64_t b = std::min(hi, (a / span + 1) * span - 1);
    ranges.emplace_back(a, b);
    if (b == hi) break;
    a = b + 1;
  }
  out.resize(ranges.size());
  auto work = [&](std::size_t i) {
    const PrimeBlock block = sieve_segment(ranges[i].first, ranges[i].second);
    out[i] = {ranges[i].first, ranges[i].second, block.count(), block.theta()};
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1 || ranges.size() == 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i) work(i);
    return out;
  }
  // Static interleaved partition; each slot is written by exactly one worker.
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < ranges.size(); i += jobs) work(i);
    }));
  }
  for (auto& f : workers) f.get();
  return out;
}

}  // namespace pb::primes
