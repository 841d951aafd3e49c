#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "primebounds/primes/prime_source.hpp"
#include "primebounds/verify/report.hpp"

namespace pb::verify {

struct CampaignPreset {
  std::string id;
  /// upper-scan, lower-scan, gap-scan, identity, positivity, inequality,
  /// eq312, crossover, stitching or constants.
  std::string mode;
  std::vector<std::string> bounds;
  std::string location;
  /// Needs a sieve beyond 1.4e9 or a long runtime; opt-in only.
  bool extended = false;
  /// Smallest sieve limit the default ranges need (0: no sieve).
  std::uint64_t sieve_limit = 0;
  std::string range;
  std::vector<std::string> checks;
};

const std::vector<CampaignPreset>& campaign_presets();
/// Throws pb::UnknownName.
const CampaignPreset& campaign_preset(std::string_view id);

struct CampaignOptions {
  /// Overrides of the main scan's index range; nullopt means the preset's.
  std::optional<std::uint64_t> from_index;
  std::optional<std::uint64_t> to_index;
  bool extended = false;
  /// Lower scans demand pi(p_i) > bound(p_{i+1}) instead of >=.
  bool strict = false;
};

/// What a run would do, without sieving.
nlohmann::json describe_campaign(std::string_view id, const CampaignOptions& options = {});

/// Runs a preset. Throws pb::DomainError for an extended preset without
/// options.extended and pb::LimitExceeded when the counter's limit is too small.
VerificationReport run_campaign(std::string_view id, const primes::PrimeCounter& counter,
                                const CampaignOptions& options = {});

/// Every registered sign claim, or only those of one polynomial.
VerificationReport verify_positivity_claims(std::optional<std::string_view> poly = std::nullopt);

}  // namespace pb::verify
