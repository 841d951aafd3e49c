#include "primebounds/bounds/alpha.hpp"

#include <cmath>

#include "primebounds/bounds/coefficients.hpp"
#include "primebounds/error.hpp"
#include "primebounds/primes/prime_source.hpp"

namespace pb::bounds {

double observed_alpha_from_pi(unsigned n, double x, double pi_x) {
  if (n < 1 || n > 6) throw DomainError("observed_alpha supports 1 <= n <= 6");
  if (!(x > 1) || !(pi_x > 0)) throw DomainError("observed_alpha needs x > 1 and pi(x) > 0");
  const auto k = panaitopol_coefficients(n);
  const long double t = std::log(static_cast<long double>(x));
  long double inner = t - 1.0L;
  for (unsigned i = 1; i < n; ++i) inner -= static_cast<long double>(k[i - 1].get_d()) / std::pow(t, i);
  inner -= static_cast<long double>(x) / pi_x;
  return static_cast<double>(std::pow(t, n) / k[n - 1].get_d() * inner - 1.0L);
}

double observed_alpha(unsigned n, std::uint64_t x, const primes::PrimeCounter& counter) {
  return observed_alpha_from_pi(n, static_cast<double>(x), static_cast<double>(counter.pi_of(x)));
}

}  // namespace pb::bounds
