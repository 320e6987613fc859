#pragma once

#include <stdexcept>
#include <string>

namespace hetbell {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed rational, distribution spec, or config entry.
class ParseError : public Error {
 public:
  using Error::Error;
};

class PartsMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument sequence shorter than the partial Bell polynomial requires.
class InsufficientSequence : public Error {
 public:
  using Error::Error;
};

/// A moment-list distribution was asked for a moment beyond its length.
class MomentUnavailable : public Error {
 public:
  using Error::Error;
};

/// Distribution parameters violate the family's constraints.
class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

class UnsupportedDistribution : public Error {
 public:
  using Error::Error;
};

class NonPositiveEvaluationPoint : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class MissingDistribution : public Error {
 public:
  using Error::Error;
};

}  // namespace hetbell
