#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opuc {

// Two families: InputError maps to CLI exit code 2, SolverFailure to 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const { return "Error"; }
};

class InputError : public Error {
 public:
  using Error::Error;
  const char* name() const override { return "InputError"; }
};

class SolverFailure : public Error {
 public:
  using Error::Error;
  const char* name() const override { return "SolverFailure"; }
};

#define OPUC_INPUT_ERROR(NAME)                             \
  class NAME final : public InputError {                   \
   public:                                                 \
    using InputError::InputError;                          \
    const char* name() const override { return #NAME; }    \
  }

#define OPUC_SOLVER_ERROR(NAME)                            \
  class NAME : public SolverFailure {                      \
   public:                                                 \
    using SolverFailure::SolverFailure;                    \
    const char* name() const override { return #NAME; }    \
  }

OPUC_INPUT_ERROR(ValidationError);
OPUC_INPUT_ERROR(DegreeError);
OPUC_INPUT_ERROR(NotSchurStableError);
OPUC_INPUT_ERROR(NotSchurError);
OPUC_INPUT_ERROR(DegenerateMeasureError);
OPUC_INPUT_ERROR(DegenerateParametersError);
OPUC_INPUT_ERROR(DegenerateTriangleError);
OPUC_INPUT_ERROR(ProductConditionError);
OPUC_INPUT_ERROR(NotRealizableError);
OPUC_INPUT_ERROR(NotDefectOneError);
OPUC_INPUT_ERROR(NotCompletelyNonUnitaryError);
OPUC_INPUT_ERROR(NotContractionError);
OPUC_INPUT_ERROR(IllConditionedError);
OPUC_INPUT_ERROR(PoleError);
OPUC_INPUT_ERROR(GeometryError);

OPUC_SOLVER_ERROR(SolverError);
OPUC_SOLVER_ERROR(InversionError);
OPUC_SOLVER_ERROR(InternalConsistencyError);

#undef OPUC_INPUT_ERROR
#undef OPUC_SOLVER_ERROR

// Root finder failure; keeps the per-root residuals for diagnostics.
class ConvergenceError final : public SolverFailure {
 public:
  ConvergenceError(const std::string& msg, std::vector<double> residuals)
      : SolverFailure(msg), residuals_(std::move(residuals)) {}
  const char* name() const override { return "ConvergenceError"; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace opuc
