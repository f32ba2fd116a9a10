#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finring {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property query was made against the one-element ring, or a construction
/// that needs a nonzero ring received the zero ring.
class DegenerateRingError : public Error {
 public:
  using Error::Error;
};

/// An operation would exceed one of the configured resource caps.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& cap_name, std::size_t limit, std::size_t requested)
      : Error("cap '" + cap_name + "' exceeded: limit " + std::to_string(limit) +
              ", requested " + std::to_string(requested)),
        cap_name_(cap_name),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap_name() const { return cap_name_; }
  std::size_t limit() const { return limit_; }
  std::size_t requested() const { return requested_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
  std::size_t requested_;
};

/// An element or ideal belonging to one ring was used with a different ring.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold (non-monic modulus, not a field, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a construction expression. Position is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

/// A parsed expression failed to elaborate, e.g. an element literal that does
/// not denote an element of the context ring.
class ElaborationError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace finring
