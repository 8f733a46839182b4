#pragma once

#include <stdexcept>
#include <string>

namespace coxlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTransposition : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class TrivialRelator : public Error {
 public:
  using Error::Error;
};

class UnsupportedGrid : public Error {
 public:
  using Error::Error;
};

/// A shipped fixture failed its consistency oracle.
class CorruptFixture : public Error {
 public:
  using Error::Error;
};

/// A computed value contradicts what the fixture labeling predicts.
class FixtureInconsistency : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic would have wrapped.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad letters, unknown edges, unreadable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace coxlab
