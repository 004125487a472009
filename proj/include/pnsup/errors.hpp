#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pnsup {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed net or guard document. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A configured exploration or search limit was hit.
class LimitError : public Error {
 public:
  using Error::Error;
};

class StateLimitExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

class BoundExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

class ClosureLimitExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

class SearchLimitExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

/// The initial marking is itself forbidden.
class NoSupervisorExists : public Error {
 public:
  using Error::Error;
};

class InfeasibleCover : public Error {
 public:
  using Error::Error;
};

}  // namespace pnsup
