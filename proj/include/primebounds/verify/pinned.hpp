#pragma once

#include "primebounds/verify/report.hpp"

namespace pb::verify {

/// Exact internal consistency of the constants pinned at x1 = 10^14 and
/// x2 = 8*10^9: the K1 brackets, f(x1, a) >= b^8 K1, the starting margins of
/// the J envelopes, the log brackets themselves and z_3(2.65). Nothing here
/// touches the sieve; the claims rest on the recorded axioms.
VerificationReport verify_pinned_constants();

}  // namespace pb::verify
