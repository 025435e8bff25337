#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kam {

enum class ErrorCode {
  invalid_argument = 1,
  parse_error,
  precondition,
  not_converged,
  unknown_key,
  duplicate_key,
  grid_mismatch,
  not_normalized,
  unknown_scenario,
  internal,
};

constexpr const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::not_converged: return "not_converged";
    case ErrorCode::unknown_key: return "unknown_key";
    case ErrorCode::duplicate_key: return "duplicate_key";
    case ErrorCode::grid_mismatch: return "grid_mismatch";
    case ErrorCode::not_normalized: return "not_normalized";
    case ErrorCode::unknown_scenario: return "unknown_scenario";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Text-level failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : ParseError(ErrorCode::parse_error, line, column, message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::precondition, what) {}
};

class SolverError : public Error {
 public:
  SolverError(const std::string& what, double final_residual)
      : Error(ErrorCode::not_converged, what), residual_(final_residual) {}
  double final_residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace kam
