#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "primebounds/primes/theta.hpp"

namespace pb::primes {

class Sieve;

/// An exact anchor (x, pi(x)) with an enclosure of theta(x).
struct Checkpoint {
  std::uint64_t x = 0;
  std::uint64_t pi = 0;
  ThetaValue theta;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// `x,pi,theta_value,theta_abs_error`, theta fields at 17 significant digits.
std::string format_record(const Checkpoint& cp);
/// Throws pb::CorruptFile on malformed input.
Checkpoint parse_record(const std::string& line);

/// Ordered, immutable set of checkpoints read from or written to a file.
///
/// File layout: one record per line followed by `#checksum,<16 hex digits>`,
/// an FNV-1a 64 digest of every preceding byte.
class CheckpointTable {
 public:
  CheckpointTable() = default;
  explicit CheckpointTable(std::vector<Checkpoint> records);

  const std::vector<Checkpoint>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  /// Largest checkpoint with x <= `x`, or nullptr.
  const Checkpoint* floor(std::uint64_t x) const;
  /// Largest checkpoint with pi < n, or nullptr.
  const Checkpoint* floor_by_count(std::uint64_t n) const;

  void write(std::ostream& out) const;
  static CheckpointTable read(std::istream& in);
  static CheckpointTable load(const std::filesystem::path& path);
  /// Atomic replace through a temporary file.
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<Checkpoint> records_;
};

/// Writes checkpoints at every multiple of `stride` up to `limit` into `path`.
///
/// Resumes from an existing valid file with the same stride and leaves a
/// complete file untouched. Theta at each checkpoint is the previous
/// checkpoint's enclosure plus the compensated sum over the stride, so a
/// resumed build reproduces a fresh one bit-for-bit.
/// Throws pb::DomainError for stride < 1e6, pb::CorruptFile for a damaged or
/// incompatible existing file, pb::IoError on write failure.
CheckpointTable build_checkpoints(const std::filesystem::path& path, std::uint64_t limit, std::uint64_t stride,
                                  const Sieve& sieve, unsigned jobs = 1);

inline constexpr std::uint64_t kMinCheckpointStride = 1'000'000;
inline constexpr std::uint64_t kDefaultCheckpointStride = 10'000'000;

}  // namespace pb::primes
