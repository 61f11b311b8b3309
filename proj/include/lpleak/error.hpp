#pragma once
#include <stdexcept>
#include <string>

namespace lpleak {

/// Base of every error raised by the library. `kind()` drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  enum class Kind { argument, data, numerical };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Bad argument or out-of-domain hyperparameter.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(Kind::argument, what) {}
};

/// Malformed edge list. Carries the 1-based line number (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(Kind::data, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A split or negative sample that cannot be produced from the given graph.
class SplitError : public Error {
 public:
  explicit SplitError(const std::string& what) : Error(Kind::data, what) {}
};

/// Unreadable dataset, malformed config, unwritable output.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(Kind::data, what) {}
};

/// Non-convergence, undefined metric, non-finite scores.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(Kind::numerical, what) {}
};

}  // namespace lpleak
