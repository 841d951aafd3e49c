#include "primebounds/cli/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "primebounds/bounds/bounds.hpp"
#include "primebounds/cli/numeric_input.hpp"
#include "primebounds/error.hpp"
#include "primebounds/exactmath/registry.hpp"
#include "primebounds/primes/primes.hpp"
#include "primebounds/verify/campaigns.hpp"
#include "primebounds/verify/crossover.hpp"
#include "primebounds/verify/identities.hpp"
#include "primebounds/verify/inequalities.hpp"

namespace pb::cli {

namespace {

struct Options {
  std::string limit;
  std::string checkpoints;
  std::string precision = "default";
  unsigned jobs = 1;
  bool extended = false;

  std::string x, n, name, names, grid = "log:10:35:100", out, campaign, from = "auto", to = "auto";
  std::string lo, hi, bound_a, bound_b, stride = "1e7";
  bool json = false, dry_run = false, hp = false, all = false;
};

Config make_config(const Options& o) {
  Config c;
  if (!o.limit.empty()) {
    c.limit = parse_count(o.limit);
  } else if (o.extended) {
    c.limit = kExtendedLimit;
  }
  if (c.limit < 1'000'000) throw UsageError("--limit must be at least 1e6");
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (!o.checkpoints.empty()) {
    c.checkpoints = o.checkpoints;
  } else if (const char* env = std::getenv("PB_CHECKPOINTS"); env != nullptr && *env != '\0') {
    c.checkpoints = env;
  }
  if (o.precision == "strict") {
    c.precision = PrecisionPolicy::kStrict;
  } else if (o.precision != "default") {
    throw UsageError("--precision must be default or strict");
  }
  c.jobs = o.jobs;
  return c;
}

std::unique_ptr<primes::PrimeCounter> make_counter(const Config& c, std::ostream& err) {
  primes::CheckpointTable table;
  if (!c.checkpoints.empty()) {
    if (std::filesystem::exists(c.checkpoints)) {
      table = primes::CheckpointTable::load(c.checkpoints);
    } else {
      err << "note: checkpoint file " << c.checkpoints << " not found; sieving from zero\n";
    }
  }
  primes::PrimeConfig pc;
  pc.limit = c.limit;
  pc.jobs = c.jobs;
  return std::make_unique<primes::PrimeCounter>(pc, std::move(table));
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed: " + path);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// "log:a:b:n" (n points evenly spaced in log x) or "lin:a:b:n".
std::vector<double> parse_grid(const std::string& text, bool& in_log) {
  std::vector<std::string> parts;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ':');) parts.push_back(item);
  if (parts.size() != 4 || (parts[0] != "log" && parts[0] != "lin")) {
    throw UsageError("--x-grid must look like log:10:35:100 or lin:1e6:2e6:11");
  }
  in_log = parts[0] == "log";
  const double a = exact::to_double(parse_real(parts[1]).value);
  const double b = exact::to_double(parse_real(parts[2]).value);
  const std::uint64_t n = parse_count(parts[3]);
  if (n < 2 || !(b > a)) throw UsageError("--x-grid needs at least two points and a < b");
  std::vector<double> grid;
  for (std::uint64_t i = 0; i < n; ++i) grid.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  return grid;
}

std::optional<std::uint64_t> parse_index(const std::string& text) {
  if (text == "auto") return std::nullopt;
  return parse_count(text);
}

int emit_report(const verify::VerificationReport& report, const Options& o, std::ostream& out) {
  write_output(report.to_json().dump(2) + "\n", o.out, out);
  if (!o.out.empty()) out << verify::to_string(report.status) << "\n";
  return report.exit_code();
}

const bounds::BoundSpec& spec_named(const std::string& name) {
  return bounds::BoundCatalogue::builtin().get(name);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit prime-counting bounds: sieve, evaluate, verify", "pbounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--limit", o.limit, "global sieve limit (>= 1e6)");
  app.add_option("--checkpoints", o.checkpoints, "checkpoint file (default: $PB_CHECKPOINTS)");
  app.add_option("--precision", o.precision, "default | strict");
  app.add_option("--jobs", o.jobs, "worker threads (>= 1)");
  app.add_flag("--extended", o.extended, "allow extended-scale campaigns and raise the default limit to 8.1e9");

  auto* primes_cmd = app.add_subcommand("primes", "prime counting");
  primes_cmd->require_subcommand(1);
  auto* pi_cmd = primes_cmd->add_subcommand("pi", "pi(x)");
  pi_cmd->add_option("--x", o.x, "x")->required();
  auto* theta_cmd = primes_cmd->add_subcommand("theta", "theta(x) with its error bound");
  theta_cmd->add_option("--x", o.x, "x")->required();
  auto* nth_cmd = primes_cmd->add_subcommand("nth", "n-th prime");
  nth_cmd->add_option("--n", o.n, "n")->required();
  auto* cp_cmd = primes_cmd->add_subcommand("checkpoints", "build or resume a checkpoint file");
  cp_cmd->add_option("--out", o.out, "output file (default: --checkpoints / $PB_CHECKPOINTS)");
  cp_cmd->add_option("--stride", o.stride, "checkpoint spacing (>= 1e6)");

  auto* bounds_cmd = app.add_subcommand("bounds", "bound catalogue");
  bounds_cmd->require_subcommand(1);
  auto* eval_cmd = bounds_cmd->add_subcommand("eval", "evaluate a bound");
  eval_cmd->add_option("--name", o.name, "bound name")->required();
  eval_cmd->add_option("--x", o.x, "abscissa, e.g. 1e6 or e^23.11")->required();
  eval_cmd->add_flag("--hp", o.hp, "evaluate at 128 bits");
  auto* coeffs_cmd = bounds_cmd->add_subcommand("coeffs", "Panaitopol coefficients k_1..k_n");
  coeffs_cmd->add_option("--n", o.n, "n")->required();
  auto* list_cmd = bounds_cmd->add_subcommand("list", "list the catalogue");
  list_cmd->add_flag("--json", o.json, "full JSON export");
  auto* deriv_cmd = bounds_cmd->add_subcommand("derivative", "d/dx bound as a rational function of t = log x");
  deriv_cmd->add_option("--name", o.name, "bound name")->required();
  auto* table_cmd = bounds_cmd->add_subcommand("table", "CSV table of bounds over a grid");
  table_cmd->add_option("--bounds", o.names, "comma-separated bound names")->required();
  table_cmd->add_option("--x-grid", o.grid, "log:a:b:n or lin:a:b:n");
  table_cmd->add_option("--out", o.out, "CSV file (default: stdout)");
  auto* alpha_cmd = bounds_cmd->add_subcommand("alpha", "observed alpha_n(x) from the exact pi(x)");
  alpha_cmd->add_option("--n", o.n, "n in 1..6")->required();
  alpha_cmd->add_option("--x", o.x, "x")->required();
  bounds_cmd->add_subcommand("registry", "polynomial registry as JSON");
  bounds_cmd->add_subcommand("constants", "pinned proof constants as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "verification campaigns");
  verify_cmd->require_subcommand(1);
  auto* run_cmd = verify_cmd->add_subcommand("run", "run a campaign preset");
  run_cmd->add_option("--campaign", o.campaign, "preset name")->required();
  run_cmd->add_option("--from-index", o.from, "first index or auto");
  run_cmd->add_option("--to-index", o.to, "last index or auto");
  run_cmd->add_flag("--dry-run", o.dry_run, "describe ranges and bounds without sieving");
  run_cmd->add_option("--out", o.out, "report file (default: stdout)");
  auto* ident_cmd = verify_cmd->add_subcommand("identity", "check a registered identity");
  ident_cmd->add_option("--name", o.name, "identity name");
  ident_cmd->add_flag("--all", o.all, "every identity");
  auto* pos_cmd = verify_cmd->add_subcommand("positivity", "certify registered sign claims");
  pos_cmd->add_option("--name", o.name, "polynomial name (default: all)");
  auto* ineq_cmd = verify_cmd->add_subcommand("inequality", "check a registered rational inequality");
  ineq_cmd->add_option("--name", o.name, "inequality name");
  ineq_cmd->add_flag("--all", o.all, "every inequality");
  verify_cmd->add_subcommand("list", "list campaign presets");

  auto* cross_cmd = app.add_subcommand("crossover", "where two bounds cross");
  cross_cmd->add_option("--a", o.bound_a, "first bound")->required();
  cross_cmd->add_option("--b", o.bound_b, "second bound")->required();
  cross_cmd->add_option("--lo", o.lo, "bracket start, e.g. e^20")->required();
  cross_cmd->add_option("--hi", o.hi, "bracket end, e.g. e^25")->required();

  std::vector<std::string> argv_storage{"pbounds"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Config config = make_config(o);
    verify::CampaignOptions campaign_opts;
    campaign_opts.extended = o.extended;

    if (primes_cmd->parsed()) {
      if (cp_cmd->parsed()) {
        const std::filesystem::path path = o.out.empty() ? config.checkpoints : std::filesystem::path(o.out);
        if (path.empty()) throw UsageError("checkpoints needs --out, --checkpoints or PB_CHECKPOINTS");
        primes::PrimeConfig pc;
        pc.limit = config.limit;
        pc.jobs = config.jobs;
        const primes::Sieve sieve(pc.limit, pc.segment_bits);
        const auto table = primes::build_checkpoints(path, config.limit, parse_count(o.stride), sieve, config.jobs);
        out << table.records().size() << " checkpoints in " << path.string() << "\n";
        return 0;
      }
      const auto counter = make_counter(config, err);
      if (pi_cmd->parsed()) {
        out << counter->pi_of(parse_count(o.x)) << "\n";
      } else if (theta_cmd->parsed()) {
        const primes::ThetaValue t = counter->theta_of(parse_count(o.x));
        out << format_double(t.value) << " +- " << format_double(t.abs_error) << "\n";
      } else {
        out << counter->nth_prime(parse_count(o.n)) << "\n";
      }
      return 0;
    }

    if (bounds_cmd->parsed()) {
      if (coeffs_cmd->parsed()) {
        const std::uint64_t n = parse_count(o.n);
        if (n < 1 || n > 10'000) throw UsageError("--n must be in 1..10000");
        const auto k = bounds::panaitopol_coefficients(static_cast<unsigned>(n));
        for (std::size_t i = 0; i < k.size(); ++i) out << (i ? " " : "") << k[i].get_str();
        out << "\n";
      } else if (eval_cmd->parsed()) {
        const auto& spec = spec_named(o.name);
        const RealInput x = parse_real(o.x);
        if (o.hp) {
          out << bounds::eval_bound_hp(spec, x.to_bigfloat(128)).to_string(30) << "\n";
        } else {
          out << format_double(bounds::eval_bound(spec, x.to_double())) << "\n";
        }
      } else if (list_cmd->parsed()) {
        if (o.json) {
          out << bounds::BoundCatalogue::builtin().to_json().dump(2) << "\n";
        } else {
          for (const auto& s : bounds::BoundCatalogue::builtin().entries()) {
            out << s.name << "\t" << bounds::to_string(s.shape()) << "\t" << bounds::to_string(s.direction) << "\t"
                << s.threshold.text() << "\t" << s.location << "\n";
          }
        }
      } else if (deriv_cmd->parsed()) {
        out << bounds::bound_derivative_in_t(spec_named(o.name)).to_string() << "\n";
      } else if (table_cmd->parsed()) {
        const auto names = split_list(o.names);
        if (names.empty()) throw UsageError("--bounds is empty");
        std::vector<const bounds::BoundSpec*> specs;
        for (const auto& n : names) specs.push_back(&spec_named(n));
        bool in_log = true;
        const auto grid = parse_grid(o.grid, in_log);
        std::ostringstream csv;
        csv << "log_x,x";
        for (const auto& n : names) csv << "," << n;
        csv << "\n" << std::setprecision(12);
        for (const double g : grid) {
          const double x = in_log ? std::exp(g) : g;
          csv << (in_log ? g : std::log(x)) << "," << x;
          for (const auto* s : specs) {
            csv << ",";
            try {
              csv << bounds::eval_bound(*s, x);
            } catch (const DomainError&) {
              csv << "nan";
            }
          }
          csv << "\n";
        }
        write_output(csv.str(), o.out, out);
      } else if (alpha_cmd->parsed()) {
        const auto counter = make_counter(config, err);
        const std::uint64_t n = parse_count(o.n);
        if (n < 1 || n > 6) throw UsageError("--n must be in 1..6");
        out << format_double(bounds::observed_alpha(static_cast<unsigned>(n), parse_count(o.x), *counter)) << "\n";
      } else if (bounds_cmd->got_subcommand("registry")) {
        out << exact::PolynomialRegistry::builtin().to_json().dump(2) << "\n";
      } else {
        out << bounds::ProofConstants::builtin().to_json().dump(2) << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (run_cmd->parsed()) {
        campaign_opts.from_index = parse_index(o.from);
        campaign_opts.to_index = parse_index(o.to);
        const auto& preset = verify::campaign_preset(o.campaign);
        if (o.dry_run) {
          write_output(verify::describe_campaign(o.campaign, campaign_opts).dump(2) + "\n", o.out, out);
          return 0;
        }
        if (preset.extended && !o.extended) {
          throw UsageError("campaign " + preset.id + " is extended-scale; pass --extended");
        }
        Config c = config;
        if (o.limit.empty()) c.limit = std::max(preset.sieve_limit, c.limit);
        if (config.precision == PrecisionPolicy::kStrict) campaign_opts.strict = true;
        const auto counter = make_counter(c, err);
        return emit_report(verify::run_campaign(o.campaign, *counter, campaign_opts), o, out);
      }
      if (ident_cmd->parsed()) {
        if (o.all || o.name.empty()) return emit_report(verify::verify_all_identities(), o, out);
        const auto r = verify::verify_polynomial_identity(o.name);
        out << (r.holds ? "true" : "false") << "\n";
        return r.holds ? 0 : 1;
      }
      if (pos_cmd->parsed()) {
        return emit_report(o.name.empty() ? verify::verify_positivity_claims()
                                          : verify::verify_positivity_claims(std::string_view(o.name)),
                           o, out);
      }
      if (ineq_cmd->parsed()) {
        if (o.all || o.name.empty()) return emit_report(verify::verify_all_inequalities(), o, out);
        return emit_report(verify::verify_named_inequality(o.name), o, out);
      }
      for (const auto& p : verify::campaign_presets()) {
        out << p.id << "\t" << p.mode << "\t" << (p.extended ? "extended" : "desk") << "\t" << p.location << "\n";
      }
      return 0;
    }

    const RealInput lo = parse_real(o.lo);
    const RealInput hi = parse_real(o.hi);
    const verify::Crossover c = verify::find_crossover(o.bound_a, o.bound_b, lo.to_double(), hi.to_double());
    out << "log_x " << format_double(c.log_x) << "\nx " << format_double(c.x) << "\n";
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionInsufficient& e) {
    err << "indeterminate: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pb::cli
