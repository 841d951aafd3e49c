#pragma once

#include "primebounds/exactmath/bigfloat.hpp"

namespace pb::bounds {

/// Exponential integral Ei(y) for y > 0.
///
/// Power series gamma + log y + sum y^n / (n n!) with compensated summation
/// for y <= 50, the asymptotic expansion e^y/y * sum k!/y^k beyond.
double exponential_integral(double y, double tol = 1e-15);

/// li(x) = Ei(log x), principal value. Requires x > 1 (pb::DomainError
/// otherwise). Tolerances below double epsilon are clamped.
double eval_li(double x, double tol = 1e-13);

/// li at the precision of `x` (series evaluated in MPFR, stopping once terms
/// drop below 2^-precision of the running sum).
exact::BigFloat eval_li(const exact::BigFloat& x);

}  // namespace pb::bounds
