#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pavoid {

// Base for every error raised by the library. The C API maps the concrete
// type onto a status code, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (words, morphism files). Carries the offending
// position when one exists.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

// A caller-supplied value is out of range or inconsistent.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of an operation does not hold (e.g. a checker
// that needs a uniform morphism was given a non-uniform one).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace pavoid
