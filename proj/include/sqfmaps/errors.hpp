#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqf {

// Base for every error raised by the library. The C API maps each subclass
// onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed in something that violates an operation's precondition
// (degree mismatch, non-member generator, parameter out of range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An internal consistency check failed. Raised when a computation contradicts
// a property that must hold (a construction that does not produce a valid
// triple, a non-integral Euler characteristic, a falsified quotient branch).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sqf
