#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"
#include "primebounds/bounds/bound.hpp"

namespace pb::primes {
class PrimeCounter;
}

namespace pb::bounds {

/// Every pi(x) estimate used by the proofs, keyed by name.
class BoundCatalogue {
 public:
  static const BoundCatalogue& builtin();

  const std::vector<BoundSpec>& entries() const { return entries_; }
  /// Throws pb::UnknownName.
  const BoundSpec& get(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// `[{name, shape, coefficients, direction, threshold, paper_location}, ...]`
  nlohmann::json to_json() const;

 private:
  std::vector<BoundSpec> entries_;
};

nlohmann::json to_json(const BoundSpec& spec);

/// J envelope anchored at a desk-scale x1 with pi(x1) and theta(x1) taken from
/// the sieve. Validated against the theta-distance table.
BoundSpec desk_j_bound(unsigned k, const BigRational& eta, std::uint64_t x1, const primes::PrimeCounter& counter);

}  // namespace pb::bounds
