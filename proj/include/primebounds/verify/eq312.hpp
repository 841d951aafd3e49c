#pragma once

#include "primebounds/exactmath/logspace.hpp"
#include "primebounds/verify/report.hpp"

namespace pb::verify {

/// 1.00007 s^3 e^{-s/2} + 1.78 s^3 e^{-2s/3} + eps (s+1)^3 compared with
/// `threshold`, at s = a + i.
exact::LogspaceOutcome eq312_sum(unsigned i, const exact::BigRational& eps, const exact::BigRational& threshold);

/// The sum for i = 0..75 with eps = 6.93e-12 and i = 75..100 with
/// eps = 6.49e-12, each required to stay below `threshold`. details carry the
/// maximum attained sum and its index.
VerificationReport verify_eq312(const exact::BigRational& threshold);
VerificationReport verify_eq312();

}  // namespace pb::verify
