#include "primebounds/bounds/coefficients.hpp"

namespace pb::bounds {

std::vector<exact::BigInt> panaitopol_coefficients(unsigned n) {
  std::vector<exact::BigInt> factorial(n + 1);
  factorial[0] = 1;
  for (unsigned i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

  std::vector<exact::BigInt> k(n + 1);  // 1-based
  for (unsigned m = 1; m <= n; ++m) {
    exact::BigInt rhs = factorial[m] * m;
    for (unsigned j = 1; j < m; ++j) rhs -= factorial[j] * k[m - j];
    k[m] = rhs;
  }
  return {k.begin() + 1, k.end()};
}

}  // namespace pb::bounds
