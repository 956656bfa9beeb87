#include "vinberg/error.hpp"

namespace vinberg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownLabelInRelation: return "UnknownLabelInRelation";
    case ErrorCode::MissingStructureConstant: return "MissingStructureConstant";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::SingularDiagonal: return "SingularDiagonal";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotInDualCone: return "NotInDualCone";
    case ErrorCode::NotInClosure: return "NotInClosure";
    case ErrorCode::MultiplierOutsideXpsi: return "MultiplierOutsideXpsi";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::NotInXi: return "NotInXi";
    case ErrorCode::NotInXiComponent: return "NotInXiComponent";
    case ErrorCode::NotAbsolutelyContinuous: return "NotAbsolutelyContinuous";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::SpecError: return "SpecError";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace vinberg
