#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "primebounds/cli/cli.hpp"
#include "primebounds/cli/numeric_input.hpp"

using pb::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("numeric input") {
  using namespace pb::cli;
  CHECK(parse_count("100") == 100);
  CHECK(parse_count("1e8") == 100'000'000);
  CHECK(parse_count("1.4e9") == 1'400'000'000);
  CHECK(parse_count("5*10^5") == 500'000);
  CHECK(parse_count("10^14") == 100'000'000'000'000ULL);
  CHECK_THROWS_AS(parse_count("1.5"), UsageError);
  CHECK_THROWS_AS(parse_count("abc"), UsageError);
  const auto r = parse_real("e^23.11");
  CHECK(r.is_log);
  CHECK(r.log_value() == doctest::Approx(23.11));
}

TEST_CASE("primes commands") {
  auto r = run({"primes", "pi", "--x", "100"});
  CHECK(r.code == 0);
  CHECK(r.out == "25\n");
  r = run({"primes", "nth", "--n", "5950"});
  CHECK(r.out == "58889\n");
  r = run({"--limit", "5", "primes", "pi", "--x", "10"});
  CHECK(r.code == 2);
}

TEST_CASE("bounds commands") {
  auto r = run({"bounds", "coeffs", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 3 13 71 461 3447\n");

  r = run({"bounds", "table", "--bounds", "t101,li", "--x-grid", "log:10:20:3"});
  CHECK(r.code == 0);
  std::istringstream csv(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(csv, line)) lines.push_back(line);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "log_x,x,t101,li");
  CHECK(lines[2].rfind("15,", 0) == 0);

  r = run({"bounds", "eval", "--name", "nope", "--x", "100"});
  CHECK(r.code == 2);
}

TEST_CASE("verify run") {
  auto r = run({"verify", "run", "--campaign", "thm15_gap", "--from-index", "auto", "--to-index", "auto"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "pass");

  r = run({"verify", "run", "--campaign", "t102_boundary"});
  CHECK(r.code == 2);

  // A dry run of an extended preset only describes it.
  r = run({"verify", "run", "--campaign", "t104_primescan", "--dry-run"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["sieve_limit"] == 8'100'000'000ULL);

  r = run({"verify", "run", "--campaign", "inequalities_all"});
  CHECK(r.code == 1);

  r = run({"verify", "identity", "--name", "no_such"});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"primes", "pi"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("crossover command") {
  const auto r = run({"crossover", "--a", "t101", "--b", "dusart308", "--lo", "e^20", "--hi", "e^25"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("log_x 23.100", 0) == 0);
}

TEST_CASE("checkpoint file from the command line") {
  const auto path = std::filesystem::temp_directory_path() / "pb_test_cli_cp.csv";
  std::filesystem::remove(path);
  auto r = run({"--limit", "3e6", "primes", "checkpoints", "--out", path.string(), "--stride", "1e6"});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(path));
  r = run({"--limit", "3e6", "--checkpoints", path.string(), "primes", "pi", "--x", "2500000"});
  CHECK(r.code == 0);
  CHECK(r.out == "183072\n");
  std::filesystem::remove(path);
}
