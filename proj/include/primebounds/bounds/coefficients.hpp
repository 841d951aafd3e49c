#pragma once

#include <vector>

#include "primebounds/exactmath/rational.hpp"

namespace pb::bounds {

/// k_1..k_n from k_n + 1!k_{n-1} + 2!k_{n-2} + ... + (n-1)!k_1 = n * n!.
/// Arbitrary precision, so any n >= 1 works; n = 0 yields an empty list.
std::vector<exact::BigInt> panaitopol_coefficients(unsigned n);

}  // namespace pb::bounds
