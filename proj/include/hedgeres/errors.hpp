#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hedgeres {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent algebra configuration, unknown hedge/generator.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Caller violated a precondition (mixed algebras, empty reliability set, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Interpretation does not cover a symbol or ground atom.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ReplayError : public Error {
 public:
  ReplayError(const std::string& message, std::size_t step)
      : Error("step " + std::to_string(step) + ": " + message), step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace hedgeres
