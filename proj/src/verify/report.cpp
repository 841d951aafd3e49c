#include "primebounds/verify/report.hpp"

#include <algorithm>
#include <cmath>

namespace pb::verify {

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kError: return "error";
    case Status::kIndeterminate: return "indeterminate";
  }
  return "?";
}

void VerificationReport::record_margin(double x, double value) {
  if (value < worst_margin.value || (value == worst_margin.value && x < worst_margin.x)) {
    worst_margin = {x, value};
  }
}

void VerificationReport::add_counterexample(Counterexample c) {
  counterexamples.push_back(std::move(c));
  if (status == Status::kPass) status = Status::kFail;
}

void VerificationReport::use_axiom(const std::string& axiom) {
  if (std::find(axioms_used.begin(), axioms_used.end(), axiom) == axioms_used.end()) axioms_used.push_back(axiom);
}

void VerificationReport::mark_error(const std::string& message) {
  status = Status::kError;
  notes.push_back("error: " + message);
}

void VerificationReport::mark_indeterminate(const std::string& message) {
  if (status != Status::kError) status = Status::kIndeterminate;
  notes.push_back("indeterminate: " + message);
}

namespace {

int severity(Status s) {
  switch (s) {
    case Status::kPass: return 0;
    case Status::kFail: return 1;
    case Status::kIndeterminate: return 2;
    case Status::kError: return 3;
  }
  return 3;
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
  if (severity(other.status) > severity(status)) status = other.status;
  checked += other.checked;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
  if (other.worst_margin.set()) record_margin(other.worst_margin.x, other.worst_margin.value);
  escalations += other.escalations;
  wall_ms += other.wall_ms;
  for (const auto& a : other.axioms_used) use_axiom(a);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  details.update(other.details);
}

int VerificationReport::exit_code() const {
  switch (status) {
    case Status::kPass: return 0;
    case Status::kIndeterminate: return 3;
    default: return 1;
  }
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["campaign"] = campaign;
  j["status"] = to_string(status);
  j["checked"] = checked;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : counterexamples) {
    j["counterexamples"].push_back({{"at", c.at}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"note", c.note}});
  }
  if (worst_margin.set()) {
    j["worst_margin"] = {{"x", worst_margin.x}, {"value", worst_margin.value}};
  } else {
    j["worst_margin"] = nullptr;
  }
  j["escalations"] = escalations;
  j["wall_ms"] = include_timing ? wall_ms : 0;
  j["axioms_used"] = axioms_used;
  if (!notes.empty()) j["notes"] = notes;
  if (!details.empty()) j["details"] = details;
  return j;
}

}  // namespace pb::verify
