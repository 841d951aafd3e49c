#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "primebounds/exactmath/poly.hpp"
#include "primebounds/exactmath/sturm.hpp"

namespace pb::exact {

enum class ClaimKind {
  kPositive,            // p > 0 on [lo, hi]
  kNonNegative,         // p >= 0 on [lo, hi]
  kNegative,            // p < 0 on [lo, hi]
  kAtLeast,             // p - reference >= 0 on [lo, hi]
  kValueAtMost,         // p(lo) <= value
  kDerivativePositive,  // p' > 0 on [lo, hi]
};

std::string_view to_string(ClaimKind kind);

struct SignClaim {
  ClaimKind kind = ClaimKind::kNonNegative;
  BigRational lo;
  UpperEnd hi;
  /// Comparison polynomial for kAtLeast.
  Poly reference;
  /// Right-hand side for kValueAtMost.
  BigRational value;

  std::string statement(std::string_view poly_name) const;
};

struct RegisteredPoly {
  std::string name;
  /// The expression as typed into the registry (kept for audit).
  std::string expression;
  Poly poly;
  std::vector<SignClaim> claims;
  std::string location;
};

struct ClaimResult {
  std::string poly;
  std::string statement;
  bool holds = false;
  SignCertificate certificate;
  /// Exact value for point claims.
  std::string value;
};

/// Certifies one claim with Sturm chains and exact evaluation.
ClaimResult check_claim(const RegisteredPoly& entry, const SignClaim& claim);

/// Every named polynomial used in the bound proofs, with its sign claims.
class PolynomialRegistry {
 public:
  static const PolynomialRegistry& builtin();

  const std::vector<RegisteredPoly>& entries() const { return entries_; }
  /// Throws pb::UnknownName.
  const RegisteredPoly& get(std::string_view name) const;
  bool contains(std::string_view name) const;

  std::vector<ClaimResult> check_all() const;

  /// Audit dump: one object per polynomial with `name, degree, coefficients[],
  /// threshold, claimed_sign, paper_location` plus the full claim list.
  nlohmann::json to_json() const;

 private:
  void add(RegisteredPoly entry);
  std::vector<RegisteredPoly> entries_;
};

}  // namespace pb::exact
