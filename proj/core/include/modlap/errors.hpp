#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modlap {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid run configuration (bad flag values, unknown model tag, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numeric procedure did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The first derivative of a Heaviside series has no root in the scanned range.
class NoStationaryPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed coefficient cache file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace modlap
