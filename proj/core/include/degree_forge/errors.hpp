#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace degree_forge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range or inconsistent arguments.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Inputs that are well-formed but violate an operation's precondition,
// e.g. saturating a family that is not t-intersecting.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for this kind of input (closed forms of segments).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Raised when an exhaustive search would exceed its size guard.
class GuardError : public Error {
 public:
  GuardError(const std::string& what, std::uint64_t estimate)
      : Error(what), estimate_(estimate) {}
  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

}  // namespace degree_forge
