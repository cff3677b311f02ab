#pragma once

#include <stdexcept>
#include <string>

namespace pyragrow {

/// Broad classes used by the CLI to map failures onto exit codes.
enum class ErrorKind {
  InvalidInput,   // exit 1
  Verification,   // exit 2
  Budget,         // exit 3
  Internal,       // exit 2 (a construction produced something unverifiable)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}
  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

#define PYRAGROW_ERROR(NAME, KIND)                              \
  struct NAME : Error {                                         \
    explicit NAME(const std::string& what)                      \
        : Error(ErrorKind::KIND, #NAME, what) {}                \
  }

PYRAGROW_ERROR(NotAVeeInstance, InvalidInput);
PYRAGROW_ERROR(NotTraversing, InvalidInput);
PYRAGROW_ERROR(NoSeparatingFunctional, InvalidInput);
PYRAGROW_ERROR(InvalidFrame, InvalidInput);
PYRAGROW_ERROR(NotNested, InvalidInput);
PYRAGROW_ERROR(UnsupportedDimension, InvalidInput);
PYRAGROW_ERROR(CrossesInfinity, InvalidInput);
PYRAGROW_ERROR(InvalidStep, Verification);
PYRAGROW_ERROR(StepInvalidAfterMap, Verification);
PYRAGROW_ERROR(LiftFailed, Internal);
PYRAGROW_ERROR(NoProgress, Internal);
PYRAGROW_ERROR(RecursionBound, Internal);
PYRAGROW_ERROR(SliceFailed, Internal);
PYRAGROW_ERROR(ThetaTooLarge, Budget);
PYRAGROW_ERROR(OffsetExhausted, Budget);
PYRAGROW_ERROR(LambdaExhausted, Budget);
PYRAGROW_ERROR(MuExhausted, Budget);
PYRAGROW_ERROR(BudgetExhausted, Budget);
PYRAGROW_ERROR(ToleranceNotReached, Budget);
PYRAGROW_ERROR(DivergenceSuspected, Budget);

#undef PYRAGROW_ERROR

}  // namespace pyragrow
