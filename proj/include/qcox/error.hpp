#pragma once

#include <stdexcept>
#include <string>

namespace qcox {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inadmissible input data (Cartan type, lattice, labels).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or search cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the domain of the theorem being executed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

#define QCOX_ENSURE(cond, msg)                                    \
  do {                                                            \
    if (!(cond)) throw ::qcox::InvariantError(std::string(msg)); \
  } while (0)

}  // namespace qcox
