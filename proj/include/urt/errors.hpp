#pragma once

#include <stdexcept>
#include <string>

namespace urt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (absent vertex,
/// malformed law, mismatched distributions, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A request reaches beyond the radius on which a network is known exactly.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A sampler or mass function broke its declared contract (degree bound,
/// mass bound).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A mark holds non-finite values or too many of them.
class MarkError : public Error {
 public:
  using Error::Error;
};

/// The degree-biased measure is undefined because every root has degree d.
class DegenerateMeasureError : public Error {
 public:
  using Error::Error;
};

/// Floating-point coordinates can no longer separate lattice points.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A rejection sampler ran out of its proposal budget.
class RetryError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace urt
