#pragma once

#include <stdexcept>
#include <string>

namespace netsched {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid problem data: bad dimensions, indefinite weights, infeasible schedules.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPsd : public ValidationError {
 public:
  NotPsd(const std::string& matrix_name, const std::string& detail)
      : ValidationError("matrix " + matrix_name + " is not admissible: " + detail),
        matrix_name_(matrix_name) {}
  const std::string& matrix_name() const { return matrix_name_; }

 private:
  std::string matrix_name_;
};

class BadChannelCount : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SlotBudgetViolation : public ValidationError {
 public:
  SlotBudgetViolation(int slot, int sum, int budget)
      : ValidationError("slot " + std::to_string(slot) + " allocates " + std::to_string(sum) +
                        " channels, expected exactly " + std::to_string(budget)),
        slot_(slot) {}
  int slot() const { return slot_; }

 private:
  int slot_;
};

class RowLengthMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UncoveredPlant : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed input file or document.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Numerical failure inside a solver.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public NumericalError {
 public:
  explicit NoConvergence(const std::string& what_solver, long iterations)
      : NumericalError(what_solver + " did not converge within " + std::to_string(iterations) +
                       " iterations"),
        iterations_(iterations) {}
  long iterations() const { return iterations_; }

 private:
  long iterations_;
};

class SingularInnovation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class UnstableA : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Configured work budget exceeded before the computation started.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class SearchSpaceTooLarge : public BudgetError {
 public:
  SearchSpaceTooLarge(double required, double cap)
      : BudgetError("exhaustive search requires " + format_count(required) +
                    " sequence evaluations, above the cap of " + format_count(cap)),
        required_(required) {}
  double required() const { return required_; }

 private:
  static std::string format_count(double v);
  double required_;
};

}  // namespace netsched
