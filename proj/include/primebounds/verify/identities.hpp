#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primebounds/exactmath/rational_fn.hpp"
#include "primebounds/verify/report.hpp"

namespace pb::verify {

struct IdentityResult {
  std::string name;
  bool holds = false;
  std::string lhs;
  std::string rhs;
  std::string location;
};

struct RegisteredIdentity {
  std::string name;
  std::string statement;
  std::string location;
  std::function<std::pair<exact::RationalFn, exact::RationalFn>()> sides;
};

/// Every identity used in the proofs, built from the bound catalogue and the
/// polynomial registry.
const std::vector<RegisteredIdentity>& identity_catalogue();

/// Exact equality of both sides after canonicalisation. Throws pb::UnknownName.
IdentityResult verify_polynomial_identity(std::string_view name);

/// All registered identities as one report.
VerificationReport verify_all_identities();

}  // namespace pb::verify
