#pragma once

#include <stdexcept>
#include <string>

namespace cutwave {

// Text input that does not follow the expected grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), detail_(what), line_(line) {}
  // Same error attributed to a file: "<file>:<line>: <what>".
  ParseError(const std::string& file, const ParseError& inner)
      : std::runtime_error(file + ":" + std::to_string(inner.line()) + ": " + inner.detail()),
        detail_(inner.detail()),
        line_(inner.line()) {}

  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
};

// Well-formed input that violates a structural invariant (self-loop, duplicate edge, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent compressed/tree file or mismatched graph.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cutwave
