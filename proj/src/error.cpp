#include "qhopf/error.hpp"

namespace qhopf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::LevelMismatch: return "LEVEL_MISMATCH";
    case ErrorCode::NotDivisible: return "NOT_DIVISIBLE";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotInvertible: return "NOT_INVERTIBLE";
    case ErrorCode::CounitConditionFailed: return "COUNIT_CONDITION_FAILED";
    case ErrorCode::NotCoassociative: return "NOT_COASSOCIATIVE";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::NotBijective: return "NOT_BIJECTIVE";
    case ErrorCode::NotPrimitive: return "NOT_PRIMITIVE";
    case ErrorCode::BadParameter: return "BAD_PARAMETER";
    case ErrorCode::NotACocycle: return "NOT_A_COCYCLE";
    case ErrorCode::OrderMismatch: return "ORDER_MISMATCH";
    case ErrorCode::PowerNotInner: return "POWER_NOT_INNER";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::SolverFailed: return "SOLVER_FAILED";
    case ErrorCode::NotInE: return "NOT_IN_E";
    case ErrorCode::NoSuitablePrime: return "NO_SUITABLE_PRIME";
    case ErrorCode::BadCase: return "BAD_CASE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace qhopf
