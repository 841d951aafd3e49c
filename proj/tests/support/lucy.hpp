#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace pbtest {

// Lucy_Hedgehog prime counting, O(x^{3/4}); independent of the sieve.
inline std::uint64_t lucy_pi(std::uint64_t n) {
  if (n < 2) return 0;
  const auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  std::uint64_t root = r;
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;

  std::vector<std::uint64_t> small(root + 1), large(root + 1);
  for (std::uint64_t i = 1; i <= root; ++i) {
    small[i] = i - 1;
    large[i] = n / i - 1;
  }
  for (std::uint64_t p = 2; p <= root; ++p) {
    if (small[p] == small[p - 1]) continue;
    const std::uint64_t below = small[p - 1];
    const std::uint64_t p2 = p * p;
    for (std::uint64_t i = 1; i <= root && n / i >= p2; ++i) {
      const std::uint64_t d = i * p;
      const std::uint64_t v = d <= root ? large[d] : small[n / d];
      large[i] -= v - below;
    }
    for (std::uint64_t v = root; v >= p2; --v) small[v] -= small[v / p] - below;
  }
  return large[1];
}

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace pbtest
