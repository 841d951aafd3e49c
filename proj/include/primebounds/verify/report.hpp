#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

namespace pb::verify {

enum class Status { kPass, kFail, kError, kIndeterminate };

std::string to_string(Status s);

struct Counterexample {
  /// Abscissa or index, as text so that exact values survive.
  std::string at;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

struct WorstMargin {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
  bool set() const { return value != std::numeric_limits<double>::infinity(); }
};

/// Outcome of one campaign. status is kFail exactly when counterexamples is
/// non-empty, unless an error or indeterminate comparison took precedence.
struct VerificationReport {
  std::string campaign;
  Status status = Status::kPass;
  std::uint64_t checked = 0;
  std::vector<Counterexample> counterexamples;
  WorstMargin worst_margin;
  std::uint64_t escalations = 0;
  std::int64_t wall_ms = 0;
  std::vector<std::string> axioms_used;
  std::vector<std::string> notes;
  /// Campaign-specific details (maximum sums, sub-check tables, ...).
  nlohmann::json details = nlohmann::json::object();

  /// Keeps the smaller margin; ties go to the smaller x.
  void record_margin(double x, double value);
  void add_counterexample(Counterexample c);
  void use_axiom(const std::string& axiom);
  void mark_error(const std::string& message);
  void mark_indeterminate(const std::string& message);

  /// Associative, order-independent merge of a partial report.
  void merge(const VerificationReport& other);

  bool passed() const { return status == Status::kPass; }
  /// 0 pass, 1 fail, 3 indeterminate; errors map to 1.
  int exit_code() const;

  nlohmann::json to_json(bool include_timing = true) const;
};

}  // namespace pb::verify
