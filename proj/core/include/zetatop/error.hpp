#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetatop {

// Maps one-to-one onto the command-line exit codes.
enum class ErrorKind {
  computation = 1,
  validation = 2,
  inconsistency = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::validation, "parse-error",
              what + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(ErrorKind::validation, "invalid-graph", join(violations)),
        violations_(std::move(violations)) {}
  ValidationError(std::string code, const std::string& what)
      : Error(ErrorKind::validation, std::move(code), what), violations_{what} {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid input:";
    for (const auto& s : v) out += "\n  - " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

class ComputationError : public Error {
 public:
  ComputationError(std::string code, const std::string& what)
      : Error(ErrorKind::computation, std::move(code), what) {}
};

class InconsistencyError : public Error {
 public:
  InconsistencyError(std::string code, const std::string& what)
      : Error(ErrorKind::inconsistency, std::move(code), what) {}
};

}  // namespace zetatop
