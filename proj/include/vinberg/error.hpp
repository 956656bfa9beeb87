#pragma once

#include <stdexcept>
#include <string>

namespace vinberg {

enum class ErrorCode {
  CycleDetected,
  DuplicateElement,
  UnknownLabelInRelation,
  MissingStructureConstant,
  DimensionMismatch,
  AlgebraMismatch,
  SingularDiagonal,
  NotInCone,
  NotHermitian,
  NotInDualCone,
  NotInClosure,
  MultiplierOutsideXpsi,
  Divergent,
  SupportViolation,
  NotInXi,
  NotInXiComponent,
  NotAbsolutelyContinuous,
  EmptySample,
  ZeroLambda,
  SpecError,
  CheckFailed,
};

const char* to_string(ErrorCode code);

// Every failure in the library is reported through this one type; callers
// branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vinberg
