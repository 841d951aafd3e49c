#include "primebounds/primes/checkpoint.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "primebounds/error.hpp"
#include "primebounds/primes/sieve.hpp"

namespace pb::primes {

namespace {

constexpr const char* kChecksumPrefix = "#checksum,";

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

std::uint64_t parse_u64(const std::string& s, const std::string& line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw CorruptFile("bad integer field in checkpoint record: " + line);
  }
  return std::stoull(s);
}

double parse_double(const std::string& s, const std::string& line) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw CorruptFile("bad real field in checkpoint record: " + line);
  }
  if (used != s.size()) throw CorruptFile("bad real field in checkpoint record: " + line);
  return v;
}

}  // namespace

std::string format_record(const Checkpoint& cp) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%" PRIu64 ",%" PRIu64 ",%.17g,%.17g", cp.x, cp.pi, cp.theta.value,
                cp.theta.abs_error);
  return buf;
}

Checkpoint parse_record(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
  if (fields.size() != 4) throw CorruptFile("checkpoint record needs 4 fields: " + line);
  Checkpoint cp;
  cp.x = parse_u64(fields[0], line);
  cp.pi = parse_u64(fields[1], line);
  cp.theta.value = parse_double(fields[2], line);
  cp.theta.abs_error = parse_double(fields[3], line);
  if (cp.theta.abs_error < 0) throw CorruptFile("negative theta error in record: " + line);
  return cp;
}

CheckpointTable::CheckpointTable(std::vector<Checkpoint> records) : records_(std::move(records)) {
  for (std::size_t i = 1; i < records_.size(); ++i) {
    if (records_[i].x <= records_[i - 1].x || records_[i].pi < records_[i - 1].pi) {
      throw CorruptFile("checkpoints are not monotone in x");
    }
  }
}

const Checkpoint* CheckpointTable::floor(std::uint64_t x) const {
  auto it = std::upper_bound(records_.begin(), records_.end(), x,
                             [](std::uint64_t v, const Checkpoint& cp) { return v < cp.x; });
  return it == records_.begin() ? nullptr : &*std::prev(it);
}

const Checkpoint* CheckpointTable::floor_by_count(std::uint64_t n) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), n,
                             [](const Checkpoint& cp, std::uint64_t v) { return cp.pi < v; });
  return it == records_.begin() ? nullptr : &*std::prev(it);
}

void CheckpointTable::write(std::ostream& out) const {
  std::string body;
  for (const auto& cp : records_) body += format_record(cp) + "\n";
  out << body << kChecksumPrefix << hex16(fnv1a(body)) << "\n";
}

CheckpointTable CheckpointTable::read(std::istream& in) {
  std::string body;
  std::vector<Checkpoint> records;
  bool saw_checksum = false;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    if (saw_checksum) throw CorruptFile("data after the checksum line");
    if (line.rfind(kChecksumPrefix, 0) == 0) {
      const std::string digest = line.substr(std::string(kChecksumPrefix).size());
      if (digest != hex16(fnv1a(body))) throw CorruptFile("checkpoint checksum mismatch");
      saw_checksum = true;
      continue;
    }
    records.push_back(parse_record(line));
    body += line + "\n";
  }
  if (!saw_checksum) throw CorruptFile("checkpoint file has no checksum line (truncated?)");
  return CheckpointTable(std::move(records));
}

CheckpointTable CheckpointTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open checkpoint file " + path.string());
  return read(in);
}

void CheckpointTable::save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint file " + tmp.string());
    write(out);
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
}

CheckpointTable build_checkpoints(const std::filesystem::path& path, std::uint64_t limit, std::uint64_t stride,
                                  const Sieve& sieve, unsigned jobs) {
  if (stride < kMinCheckpointStride) throw DomainError("checkpoint stride must be at least 1e6");
  std::vector<Checkpoint> records;
  if (std::filesystem::exists(path)) {
    records = CheckpointTable::load(path).records();
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].x != (i + 1) * stride) {
        throw CorruptFile("existing checkpoint file " + path.string() + " was built with a different stride");
      }
    }
  }
  const std::uint64_t target = limit / stride;
  if (target * stride > sieve.limit()) throw LimitExceeded("checkpoint limit beyond the sieve limit");

  Checkpoint running = records.empty() ? Checkpoint{} : records.back();
  bool changed = false;
  for (std::uint64_t k = records.size() + 1; k <= target; ++k) {
    const std::uint64_t lo = (k - 1) * stride + 1;
    const std::uint64_t hi = k * stride;
    ThetaAccumulator theta;
    std::uint64_t count = 0;
    for (const auto& block : sieve.summarize(lo, hi, jobs)) {
      count += block.count;
      theta.add(block.theta);
    }
    running = Checkpoint{hi, running.pi + count, running.theta + theta.result()};
    records.push_back(running);
    // Persist after every record so an interrupted build resumes here.
    CheckpointTable(records).save(path);
    changed = true;
  }
  CheckpointTable table(std::move(records));
  if (!changed && !std::filesystem::exists(path)) table.save(path);
  return table;
}

}  // namespace pb::primes
