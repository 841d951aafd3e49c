#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "primebounds/exactmath/bigfloat.hpp"
#include "primebounds/exactmath/rational_fn.hpp"
#include "primebounds/primes/theta.hpp"

namespace pb::bounds {

using exact::BigFloat;
using exact::BigRational;

enum class Direction { kUpper, kLower };
enum class Shape { kSum, kPanaitopol, kLi, kJ };

std::string to_string(Direction d);
std::string to_string(Shape s);

/// sum_i c_i x / log^i x, i = 1..n.
struct SumBound {
  std::vector<BigRational> coefficients;
};

/// x / D(log x) with D(t) = t - a0 - sum_i a_i / t^i.
struct PanaitopolBound {
  BigRational a0 = 1;
  std::vector<BigRational> a;
};

/// li(x).
struct LiBound {};

/// pi(x1) - theta(x1)/log x1 + x/log x + eta x/log^{k+1} x
///   + int_{x1}^{x} (1/log^2 t + eta/log^{k+2} t) dt.
///
/// theta_x1 is an enclosure; evaluation uses the end that keeps the result
/// conservative: the lower end for eta > 0 (upper envelopes), the upper end
/// otherwise.
struct JSpec {
  unsigned k = 3;
  BigRational eta;
  std::uint64_t x1 = 0;
  std::uint64_t pi_x1 = 0;
  primes::ThetaValue theta_x1;

  double theta_adverse() const;
};

/// Validity start: x >= value, or x >= e^value when `in_log`.
struct Threshold {
  BigRational value = 1;
  bool in_log = false;

  double x() const;
  double log_x() const;
  std::string text() const;
};

struct BoundSpec {
  std::string name;
  Direction direction = Direction::kUpper;
  Threshold threshold;
  std::string location;
  std::variant<SumBound, PanaitopolBound, LiBound, JSpec> form;

  Shape shape() const { return static_cast<Shape>(form.index()); }
};

/// Throws pb::DomainError unless k <= 4 and (|eta|, x1) matches a row of the
/// theta-distance table (or |eta| = 0.35 with x1 >= e^30).
void validate_jspec(const JSpec& spec);

/// Double-precision evaluators. All throw pb::DomainError for x <= 1.
double eval_sum_bound(const SumBound& spec, double x);
/// Throws pb::DenominatorNonPositive when D(log x) <= 0.
double eval_panaitopol_bound(const PanaitopolBound& spec, double x);
/// Throws pb::DomainError for x < x1.
double eval_J(const JSpec& spec, double x);
double eval_bound(const BoundSpec& spec, double x);

/// D(t) for a Panaitopol form, evaluated in double.
double panaitopol_denominator(const PanaitopolBound& spec, double t);
/// D(t) * t^n as an exact polynomial.
exact::Poly panaitopol_denominator_poly(const PanaitopolBound& spec);
/// D(t) as an exact rational function.
exact::RationalFn panaitopol_denominator_fn(const PanaitopolBound& spec);

/// Evaluators at the precision of x.
BigFloat eval_bound_hp(const BoundSpec& spec, const BigFloat& x);
BigFloat eval_J_hp(const JSpec& spec, const BigFloat& x);

/// Antiderivative F_m of 1/log^m t with F_1 = li, via
/// F_{m+1}(x) = (F_m(x) - x/log^m x)/m.
double log_power_antiderivative(unsigned m, double x);
BigFloat log_power_antiderivative(unsigned m, const BigFloat& x);

/// R(t) with d/dx bound(x) = R(log x), exact.
exact::RationalFn bound_derivative_in_t(const BoundSpec& spec);

}  // namespace pb::bounds
