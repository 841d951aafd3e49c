#include "primebounds/primes/prime_source.hpp"

#include <algorithm>
#include <string>

#include "primebounds/error.hpp"

namespace pb::primes {

PrimeCounter::PrimeCounter(PrimeConfig config, CheckpointTable checkpoints)
    : config_(config),
      sieve_(std::make_shared<const Sieve>(config.limit, config.segment_bits)),
      checkpoints_(std::move(checkpoints)) {
  config_.jobs = std::max(1U, config_.jobs);
  if (!checkpoints_.empty() && checkpoints_.records().back().x > config_.limit) {
    // Records beyond the limit are unusable; keep the prefix.
    std::vector<Checkpoint> kept;
    for (const auto& cp : checkpoints_.records()) {
      if (cp.x <= config_.limit) kept.push_back(cp);
    }
    checkpoints_ = CheckpointTable(std::move(kept));
  }
}

void PrimeCounter::check_limit(std::uint64_t x) const {
  if (x > config_.limit) {
    throw LimitExceeded(std::to_string(x) + " is beyond the configured sieve limit " + std::to_string(config_.limit));
  }
}

Checkpoint PrimeCounter::pi_theta_of(std::uint64_t x) const {
  check_limit(x);
  Checkpoint start;
  if (const Checkpoint* cp = checkpoints_.floor(x)) start = *cp;
  if (start.x == x) return start;
  ThetaAccumulator tail;
  std::uint64_t count = 0;
  for (const auto& block : sieve_->summarize(start.x + 1, x, config_.jobs)) {
    count += block.count;
    tail.add(block.theta);
  }
  return {x, start.pi + count, start.x == 0 ? tail.result() : start.theta + tail.result()};
}

std::uint64_t PrimeCounter::pi_of(std::uint64_t x) const {
  check_limit(x);
  std::uint64_t base_x = 0;
  std::uint64_t count = 0;
  if (const Checkpoint* cp = checkpoints_.floor(x)) {
    base_x = cp->x;
    count = cp->pi;
  }
  if (base_x == x) return count;
  sieve_->for_each_block(base_x + 1, x, config_.jobs, [&](const PrimeBlock& b) {
    count += b.count();
    return true;
  });
  return count;
}

ThetaValue PrimeCounter::theta_of(std::uint64_t x) const { return pi_theta_of(x).theta; }

std::uint64_t PrimeCounter::nth_prime(std::uint64_t n) const {
  if (n == 0) throw DomainError("nth_prime is defined for n >= 1");
  std::uint64_t base_x = 0;
  std::uint64_t count = 0;
  if (const Checkpoint* cp = checkpoints_.floor_by_count(n)) {
    base_x = cp->x;
    count = cp->pi;
  }
  std::uint64_t found = 0;
  sieve_->for_each_block(base_x + 1, config_.limit, config_.jobs, [&](const PrimeBlock& b) {
    const std::uint64_t c = b.count();
    if (count + c < n) {
      count += c;
      return true;
    }
    b.for_each_prime([&](std::uint64_t p) {
      if (++count == n) {
        found = p;
        return false;
      }
      return true;
    });
    return false;
  });
  if (found == 0) {
    throw LimitExceeded("p_" + std::to_string(n) + " lies beyond the configured sieve limit " +
                        std::to_string(config_.limit));
  }
  return found;
}

void PrimeCounter::for_each_prime(std::uint64_t lo, std::uint64_t hi,
                                  const std::function<bool(std::uint64_t)>& visit) const {
  if (lo > hi) return;
  check_limit(hi);
  sieve_->for_each_block(lo, hi, config_.jobs, [&](const PrimeBlock& b) { return b.for_each_prime(visit); });
}

std::vector<std::uint64_t> PrimeCounter::primes_in(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  for_each_prime(lo, hi, [&](std::uint64_t p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::uint64_t PrimeCounter::next_prime_after(std::uint64_t x) const {
  std::uint64_t found = 0;
  if (x < config_.limit) {
    for_each_prime(x + 1, config_.limit, [&](std::uint64_t p) {
      found = p;
      return false;
    });
  }
  if (found == 0) throw LimitExceeded("no prime after " + std::to_string(x) + " within the sieve limit");
  return found;
}

std::uint64_t PrimeCounter::prev_prime_at_most(std::uint64_t x) const {
  check_limit(x);
  const std::uint64_t window = sieve_->block_span();
  for (std::uint64_t hi = x;;) {
    const std::uint64_t lo = hi >= window ? hi - window + 1 : 0;
    const PrimeBlock block = sieve_->sieve_segment(lo, hi);
    std::uint64_t last = 0;
    block.for_each_prime([&](std::uint64_t p) {
      last = p;
      return true;
    });
    if (last != 0) return last;
    if (lo == 0) return 0;
    hi = lo - 1;
  }
}

}  // namespace pb::primes
