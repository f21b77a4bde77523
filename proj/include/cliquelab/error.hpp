#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cliquelab {

enum class ErrorKind {
  parameter,
  parse,
  self_loop,
  id_range,
  io,
  precondition,
  budget,
  convergence,
  inconsistency,
};

inline constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::parse: return "parse";
    case ErrorKind::self_loop: return "self_loop";
    case ErrorKind::id_range: return "id_range";
    case ErrorKind::io: return "io";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::budget: return "budget";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::inconsistency: return "inconsistency";
  }
  return "unknown";
}

// Computation failures (as opposed to bad input) are the ones a caller may
// retry with a different method or a larger budget.
inline constexpr bool is_computation_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::budget || kind == ErrorKind::convergence ||
         kind == ErrorKind::inconsistency;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message)
      : Error(ErrorKind::parameter, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorKind::precondition, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorKind::io, message) {}
};

/// Malformed graph file. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, line == 0 ? message
                              : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message)
      : Error(ErrorKind::budget, message) {}
};

/// Power iteration ran out of iterations; carries the last bracket.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double lower, double upper,
                   std::size_t iterations)
      : Error(ErrorKind::convergence, message),
        lower_(lower),
        upper_(upper),
        iterations_(iterations) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double lower_;
  double upper_;
  std::size_t iterations_;
};

class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& message)
      : Error(ErrorKind::inconsistency, message) {}
};

}  // namespace cliquelab
