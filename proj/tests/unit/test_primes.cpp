#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lucy.hpp"
#include "primebounds/error.hpp"
#include "primebounds/primes/primes.hpp"

using namespace pb::primes;
namespace fs = std::filesystem;

namespace {

PrimeCounter small_counter(std::uint64_t limit = 2'000'000) {
  PrimeConfig cfg;
  cfg.limit = limit;
  return PrimeCounter(cfg);
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pb_test_primes";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("sieve_segment examples") {
  Sieve sieve(1'000'000);
  CHECK(sieve.sieve_segment(2, 10).primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve.sieve_segment(0, 1).primes().empty());
  CHECK(sieve.sieve_segment(10, 20).primes() == std::vector<std::uint64_t>{11, 13, 17, 19});
  CHECK(sieve.sieve_segment(2, 2).primes() == std::vector<std::uint64_t>{2});
  CHECK(sieve.sieve_segment(4, 4).primes().empty());
  CHECK_THROWS_AS(sieve.sieve_segment(10, 1'000'001), pb::LimitExceeded);
  CHECK_THROWS_AS(sieve.sieve_segment(20, 10), pb::DomainError);
}

TEST_CASE("segments agree with trial division") {
  Sieve sieve(1'000'000, 1024);
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    const std::uint64_t lo = rng() % 990'000;
    const std::uint64_t hi = lo + rng() % 10'000;
    const PrimeBlock block = sieve.sieve_segment(lo, hi);
    for (std::uint64_t n = lo; n <= hi; ++n) REQUIRE(block.is_prime(n) == pbtest::trial_is_prime(n));
  }
}

TEST_CASE("pi_of matches trial division") {
  const PrimeCounter counter = small_counter();
  CHECK(counter.pi_of(0) == 0);
  CHECK(counter.pi_of(2) == 1);
  CHECK(counter.pi_of(100) == 25);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x <= 10'000; ++x) {
    if (pbtest::trial_is_prime(x)) ++count;
    if (x % 97 == 0 || x < 200) REQUIRE(counter.pi_of(x) == count);
  }
  CHECK(counter.pi_of(10'000) == 1229);

  std::vector<std::uint64_t> all = counter.primes_in(0, 1'000'000);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t x = rng() % 1'000'001;
    const auto expected = static_cast<std::uint64_t>(std::upper_bound(all.begin(), all.end(), x) - all.begin());
    REQUIRE(counter.pi_of(x) == expected);
  }
  CHECK(all.size() == 78498);
  CHECK_THROWS_AS(counter.pi_of(2'000'001), pb::LimitExceeded);
}

TEST_CASE("every x up to 1e4 counts exactly") {
  const PrimeCounter counter = small_counter(20'000);
  const std::vector<std::uint64_t> primes = counter.primes_in(0, 10'000);
  std::uint64_t count = 0;
  std::size_t next = 0;
  for (std::uint64_t x = 0; x <= 10'000; ++x) {
    if (next < primes.size() && primes[next] == x) {
      REQUIRE(pbtest::trial_is_prime(x));
      ++next;
      ++count;
    } else {
      REQUIRE_FALSE(pbtest::trial_is_prime(x));
    }
  }
  CHECK(count == 1229);
}

TEST_CASE("theta_of encloses the exact sum") {
  const PrimeCounter counter = small_counter();
  const ThetaValue t2 = counter.theta_of(2);
  CHECK(t2.value == doctest::Approx(0.693147).epsilon(1e-6));
  CHECK(t2.contains(std::log(2.0L)));
  const ThetaValue t10 = counter.theta_of(10);
  CHECK(t10.value == doctest::Approx(5.347108).epsilon(1e-6));
  CHECK(t10.contains(std::log(210.0L)));
  CHECK(counter.theta_of(1).value == 0.0);

  long double exact = 0.0L;
  for (std::uint64_t p : counter.primes_in(0, 1'000'000)) exact += std::log(static_cast<long double>(p));
  const ThetaValue big = counter.theta_of(1'000'000);
  CHECK(big.contains(exact));
  CHECK(big.abs_error <= std::ldexp(big.value, -30));
}

TEST_CASE("theta is monotone") {
  const PrimeCounter counter = small_counter();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = rng() % 1'000'000;
    std::uint64_t y = rng() % 1'000'000;
    if (x > y) std::swap(x, y);
    const ThetaValue a = counter.theta_of(x);
    const ThetaValue b = counter.theta_of(y);
    REQUIRE(a.lower() <= b.upper());
  }
}

TEST_CASE("theta-to-pi partial summation identity") {
  // pi(x) = theta(x)/log x + sum over prime steps theta_k (1/log p_k - 1/log p_{k+1}).
  const PrimeCounter counter = small_counter();
  const std::vector<std::uint64_t> primes = counter.primes_in(0, 1'000'100);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    const std::uint64_t x = 3 + rng() % 999'997;
    long double theta = 0.0L;
    long double integral = 0.0L;
    std::uint64_t pi = 0;
    for (std::size_t k = 0; k < primes.size() && primes[k] <= x; ++k) {
      theta += std::log(static_cast<long double>(primes[k]));
      ++pi;
      const long double upper = (k + 1 < primes.size() && primes[k + 1] <= x) ? primes[k + 1] : x;
      integral += theta * (1.0L / std::log(static_cast<long double>(primes[k])) - 1.0L / std::log(upper));
    }
    const ThetaValue tv = counter.theta_of(x);
    const long double rhs = static_cast<long double>(tv.value) / std::log(static_cast<long double>(x)) + integral;
    REQUIRE(std::fabs(rhs - static_cast<long double>(pi)) < 1e-6L);
    REQUIRE(counter.pi_of(x) == pi);
  }
}

TEST_CASE("nth_prime examples and round trip") {
  const PrimeCounter counter = small_counter();
  CHECK(counter.nth_prime(1) == 2);
  CHECK(counter.nth_prime(25) == 97);
  CHECK(counter.nth_prime(5950) == 58889);
  CHECK(counter.pi_of(58837) == 5949);
  CHECK(counter.pi_of(58888) == 5949);
  CHECK_THROWS_AS(counter.nth_prime(0), pb::DomainError);

  const std::vector<std::uint64_t> primes = counter.primes_in(0, 1'000'000);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t n = i + 1;
    if (n % 501 == 0 || n < 300 || n == primes.size()) {
      REQUIRE(counter.nth_prime(n) == primes[i]);
      REQUIRE(counter.pi_of(primes[i]) == n);
    }
  }
  CHECK(counter.next_prime_after(97) == 101);
  CHECK(counter.prev_prime_at_most(100) == 97);
  CHECK(counter.prev_prime_at_most(1) == 0);
}

TEST_CASE("parallel sweeps reduce deterministically") {
  PrimeConfig one;
  one.limit = 5'000'000;
  one.segment_bits = 4096;
  PrimeConfig four = one;
  four.jobs = 4;
  const PrimeCounter a(one);
  const PrimeCounter b(four);
  for (std::uint64_t x : {4'999'999ULL, 1'234'567ULL, 77'777ULL}) {
    CHECK(a.pi_of(x) == b.pi_of(x));
    const ThetaValue ta = a.theta_of(x);
    const ThetaValue tb = b.theta_of(x);
    CHECK(ta.value == tb.value);
    CHECK(ta.abs_error == tb.abs_error);
  }
}

TEST_CASE("checkpoint records round trip") {
  Checkpoint cp{1'000'000, 78498, {998484.39545242, 1.5e-9}};
  const std::string line = format_record(cp);
  CHECK(parse_record(line) == cp);
  CHECK_THROWS_AS(parse_record("1,2,3"), pb::CorruptFile);
  CHECK_THROWS_AS(parse_record("a,2,3,4"), pb::CorruptFile);
  CHECK_THROWS_AS(CheckpointTable({{10, 4, {}}, {5, 3, {}}}), pb::CorruptFile);
}

TEST_CASE("build_checkpoints examples") {
  Sieve sieve(20'000'000);

  const fs::path ten = temp_file("ten.csv");
  const CheckpointTable table = build_checkpoints(ten, 10'000'000, 1'000'000, sieve);
  REQUIRE(table.records().size() == 10);
  CHECK(table.records().back().x == 10'000'000);
  CHECK(table.records().back().pi == 664579);
  CHECK(table.records().front().pi == 78498);
  CHECK(CheckpointTable::load(ten).records() == table.records());

  const fs::path one = temp_file("one.csv");
  const CheckpointTable single = build_checkpoints(one, 1'000'000, 1'000'000, sieve);
  REQUIRE(single.records().size() == 1);
  CHECK(single.records()[0].pi == 78498);

  const fs::path empty = temp_file("empty.csv");
  CHECK(build_checkpoints(empty, 0, 1'000'000, sieve).empty());
  CHECK(CheckpointTable::load(empty).empty());

  CHECK_THROWS_AS(build_checkpoints(temp_file("bad.csv"), 10'000'000, 999'999, sieve), pb::DomainError);
}

TEST_CASE("checkpoints resume and are idempotent") {
  Sieve sieve(20'000'000);
  const fs::path fresh = temp_file("fresh.csv");
  const CheckpointTable full = build_checkpoints(fresh, 8'000'000, 1'000'000, sieve);

  const fs::path resumed = temp_file("resumed.csv");
  build_checkpoints(resumed, 3'000'000, 1'000'000, sieve);
  const CheckpointTable extended = build_checkpoints(resumed, 8'000'000, 1'000'000, sieve, 3);
  CHECK(extended.records() == full.records());

  const auto before = fs::last_write_time(fresh);
  const CheckpointTable again = build_checkpoints(fresh, 8'000'000, 1'000'000, sieve);
  CHECK(again.records() == full.records());
  CHECK(fs::last_write_time(fresh) == before);

  CHECK_THROWS_AS(build_checkpoints(fresh, 8'000'000, 2'000'000, sieve), pb::CorruptFile);
}

TEST_CASE("checksum corruption is detected") {
  Sieve sieve(5'000'000);
  const fs::path path = temp_file("corrupt.csv");
  build_checkpoints(path, 3'000'000, 1'000'000, sieve);
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const auto pos = text.find("148933");
  REQUIRE(pos != std::string::npos);
  text[pos + 5] = '4';
  {
    std::ofstream out(path, std::ios::trunc);
    out << text;
  }
  CHECK_THROWS_AS(CheckpointTable::load(path), pb::CorruptFile);

  std::istringstream missing("1000000,78498,998484.39,1e-9\n");
  CHECK_THROWS_AS(CheckpointTable::read(missing), pb::CorruptFile);
}

TEST_CASE("counter uses checkpoints consistently") {
  Sieve sieve(20'000'000);
  const fs::path path = temp_file("counter.csv");
  CheckpointTable table = build_checkpoints(path, 10'000'000, 1'000'000, sieve);
  PrimeConfig cfg;
  cfg.limit = 12'000'000;
  const PrimeCounter with(cfg, table);
  const PrimeCounter without(cfg);
  for (std::uint64_t x : {999'999ULL, 1'000'000ULL, 5'500'001ULL, 11'999'999ULL}) {
    CHECK(with.pi_of(x) == without.pi_of(x));
    const ThetaValue a = with.theta_of(x);
    const ThetaValue b = without.theta_of(x);
    CHECK(std::fabs(a.value - b.value) <= a.abs_error + b.abs_error);
  }
  CHECK(with.nth_prime(664579) == 9999991);
  CHECK(with.nth_prime(664580) == without.nth_prime(664580));
}

TEST_CASE("pi(1e8) agrees with an independent count") {
  PrimeConfig cfg;
  cfg.limit = 100'000'000;
  const PrimeCounter counter(cfg);
  const std::uint64_t sieved = counter.pi_of(100'000'000);
  CHECK(sieved == 5761455);
  CHECK(pbtest::lucy_pi(100'000'000) == sieved);
  CHECK(pbtest::lucy_pi(1'000'000) == 78498);
}
