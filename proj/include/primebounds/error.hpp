#pragma once

#include <stdexcept>
#include <string>

namespace pb {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request needs primes beyond the configured sieve limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (x <= 1 for li, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A Panaitopol-style denominator is not positive at the requested point.
class DenominatorNonPositive : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The sign of a comparison could not be decided at the highest precision tier.
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
};

/// A bracket handed to a root finder does not straddle a sign change.
class NoSignChange : public Error {
 public:
  using Error::Error;
};

/// A scan could not certify that its bound is monotone on the scanned range.
class MonotonicityUnverified : public Error {
 public:
  using Error::Error;
};

/// The denominator of a rational function changes sign on the requested range.
class DenominatorSignIndeterminate : public Error {
 public:
  using Error::Error;
};

/// Name lookup failure in one of the registries.
class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Malformed checkpoint file or failed checksum.
class CorruptFile : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Allocation failure while building a sieve block.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace pb
