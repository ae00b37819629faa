#pragma once

#include <stdexcept>
#include <string>

namespace ew {

// Bad argument to a constructor or operation (unknown vertex, n < 3, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A structural invariant of a graph or rotation system does not hold.
struct InvariantError : std::runtime_error {
  InvariantError(std::string invariant, const std::string& detail)
      : std::runtime_error("invariant '" + invariant + "' violated: " + detail),
        invariant(std::move(invariant)) {}
  std::string invariant;
};

// A coin or boundary outside the domain of a closed form.
struct AssumptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(long steps, double residual)
      : std::runtime_error("no convergence after " + std::to_string(steps) +
                           " steps, residual " + std::to_string(residual)),
        steps(steps), residual(residual) {}
  long steps;
  double residual;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line(line), column(column) {}
  int line, column;
};

}  // namespace ew
