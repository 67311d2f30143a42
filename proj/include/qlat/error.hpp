#pragma once

#include <stdexcept>
#include <string>

namespace qlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (mismatched rings, non-unit scale factor, zero mirror normal, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but not supported exactly (e.g. a
/// non-quadratic dihedral system where only float output exists).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qlat
