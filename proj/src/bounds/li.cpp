#include "primebounds/bounds/li.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "primebounds/error.hpp"

namespace pb::bounds {

double exponential_integral(double y, double tol) {
  if (!(y > 0)) throw DomainError("Ei(y) is only provided for y > 0");
  tol = std::max(tol, std::numeric_limits<double>::epsilon());
  if (y <= 50) {
    double sum = 0.0;
    double comp = 0.0;
    double term = 1.0;  // y^n / n!
    for (int n = 1; n < 1000; ++n) {
      term *= y / n;
      const double add = term / n;
      const double z = add - comp;
      const double t = sum + z;
      comp = (t - sum) - z;
      sum = t;
      if (n > y && add < tol * 0.01 * std::fabs(sum)) break;
    }
    return std::numbers::egamma + std::log(y) + sum;
  }
  // Terms k!/y^k decrease until k ~ y; stop at the smallest one.
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < static_cast<int>(y); ++k) {
    const double next = term * k / y;
    if (next > term) break;
    term = next;
    sum += term;
    if (term < tol * 0.01) break;
  }
  return std::exp(y) / y * sum;
}

double eval_li(double x, double tol) {
  if (!(x > 1)) throw DomainError("li(x) requires x > 1");
  return exponential_integral(std::log(x), tol);
}

exact::BigFloat eval_li(const exact::BigFloat& x) {
  using exact::BigFloat;
  if (!(x > BigFloat(1L, x.precision()))) throw DomainError("li(x) requires x > 1");
  const unsigned bits = x.precision() + 32;
  const BigFloat y = exact::log(BigFloat(x) * BigFloat(1L, bits));
  BigFloat sum(bits);
  BigFloat term(1L, bits);
  const BigFloat eps = exact::pow(BigFloat(0.5, bits), bits);
  for (long n = 1;; ++n) {
    term = term * y / BigFloat(n, bits);
    const BigFloat add = term / BigFloat(n, bits);
    sum += add;
    if (BigFloat(n, bits) > y && add < sum * eps) break;
    if (n > 100000) throw PrecisionInsufficient("li series did not converge");
  }
  BigFloat result = exact::euler_gamma(bits) + exact::log(y) + sum;
  BigFloat out(x.precision());
  mpfr_set(out.get(), result.get(), MPFR_RNDN);
  return out;
}

}  // namespace pb::bounds
