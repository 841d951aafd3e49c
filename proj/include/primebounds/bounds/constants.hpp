#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "primebounds/exactmath/rational.hpp"

namespace pb::bounds {

/// A literal constant taken from a proof rather than recomputed.
struct PinnedConstant {
  std::string name;
  exact::BigRational value;
  /// How the quantity relates to the value: "=", "<=", ">=".
  std::string relation;
  std::string quantity;
  std::string provenance;
};

class ProofConstants {
 public:
  static const ProofConstants& builtin();

  const std::vector<PinnedConstant>& entries() const { return entries_; }
  /// Throws pb::UnknownName.
  const PinnedConstant& get(std::string_view name) const;
  const exact::BigRational& value(std::string_view name) const { return get(name).value; }

  nlohmann::json to_json() const;

 private:
  std::vector<PinnedConstant> entries_;
};

}  // namespace pb::bounds
