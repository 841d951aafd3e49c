#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primebounds/exactmath/rational_fn.hpp"
#include "primebounds/exactmath/sturm.hpp"
#include "primebounds/verify/report.hpp"

namespace pb::verify {

struct InequalityResult {
  bool holds = false;
  /// lhs - rhs = numerator / denominator after canonicalisation.
  exact::Poly numerator;
  exact::Poly denominator;
  /// Constant sign of the denominator on the range.
  int denominator_sign = 0;
  exact::SignCertificate certificate;
};

/// lhs(t) >= rhs(t) for every t in [t_min, t_max] (t_max = nullopt: ray).
/// Throws pb::DenominatorSignIndeterminate when the cleared denominator has a
/// root in the range.
InequalityResult verify_rational_inequality(const exact::RationalFn& lhs, const exact::RationalFn& rhs,
                                            const exact::BigRational& t_min,
                                            const exact::UpperEnd& t_max = std::nullopt);

struct RegisteredInequality {
  std::string name;
  std::string statement;
  std::string location;
  exact::BigRational t_min;
  exact::UpperEnd t_max;
  std::function<std::pair<exact::RationalFn, exact::RationalFn>()> sides;
};

const std::vector<RegisteredInequality>& inequality_catalogue();

/// Checks lhs >= rhs and rhs >= 0 on the registered range. Throws pb::UnknownName.
VerificationReport verify_named_inequality(std::string_view name);

VerificationReport verify_all_inequalities();

}  // namespace pb::verify
