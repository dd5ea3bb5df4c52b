#pragma once

#include <stdexcept>
#include <string>

namespace coquasi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

/// An element or table does not belong to the group it is used with.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

/// A solution lattice holds more points than the caller allowed.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would pass its configured ceiling.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

class OddN : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace coquasi
