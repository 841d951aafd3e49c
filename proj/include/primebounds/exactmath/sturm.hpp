#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primebounds/exactmath/poly.hpp"

namespace pb::exact {

/// Sturm sequence p, p', -rem(p, p'), ... built with primitive remainders
/// (each element rescaled by a positive rational to coprime integer
/// coefficients, which leaves sign variations unchanged).
class SturmChain {
 public:
  /// Throws pb::DomainError for the zero polynomial.
  static SturmChain build(const Poly& p);

  const std::vector<Poly>& sequence() const { return sequence_; }

  int variations_at(const BigRational& t) const;
  int variations_at_infinity(bool minus_infinity = false) const;

 private:
  std::vector<Poly> sequence_;
};

/// Upper end of an interval; std::nullopt stands for +infinity.
using UpperEnd = std::optional<BigRational>;

/// Number of distinct real roots of p in (a, b]. Requires a < b and p != 0.
int sturm_count_roots(const Poly& p, const BigRational& a, const UpperEnd& b = std::nullopt);

/// Outcome of a sign certification on [a, b] (b may be +infinity).
struct SignCertificate {
  bool holds = false;
  int sign_at_start = 0;
  /// Distinct roots of p in the open interval (a, b).
  int distinct_roots = 0;
  /// Roots of odd multiplicity in (a, b); only these can flip the sign.
  int sign_changing_roots = 0;
  std::string detail;
};

/// p(t) >= 0 for every t >= a. Roots of even multiplicity are tangencies and
/// do not falsify the claim.
SignCertificate is_nonneg_on_ray(const Poly& p, const BigRational& a);
/// p(t) > 0 for every t >= a.
SignCertificate is_positive_on_ray(const Poly& p, const BigRational& a);
/// p(t) >= 0 on [a, b].
SignCertificate is_nonneg_on_interval(const Poly& p, const BigRational& a, const UpperEnd& b);
/// p(t) > 0 on [a, b].
SignCertificate is_positive_on_interval(const Poly& p, const BigRational& a, const UpperEnd& b);

}  // namespace pb::exact
