#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pk {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. position() is a byte offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that violates a type invariant or an operation's
// precondition (edge multiplicity, several components, bad choice vector...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A library-internal consistency check failed; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pk
