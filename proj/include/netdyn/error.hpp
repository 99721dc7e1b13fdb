#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netdyn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A snapshot (or one of its parts) violates a structural invariant.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A differential tuple does not fit the snapshot it is applied to.
class InconsistentTupleError : public Error {
 public:
  using Error::Error;
};

/// A measure whose denominator vanishes for the given graphs.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Invalid window, synth or pipeline parameters.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace netdyn
