#pragma once

#include <stdexcept>
#include <string>

namespace enumbers {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad offsets, out-of-range cell, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 or bounds-data input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A lower bound was requested for a cell the table cannot answer.
class UnknownRegion : public Error {
 public:
  using Error::Error;
};

/// Two bound sources disagree (lower > upper). Always a data-entry bug.
class BoundsConflict : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search ran out of its node budget before deciding.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

}  // namespace enumbers
