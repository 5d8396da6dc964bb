#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhopf {

enum class ErrorCode {
  DivisionByZero,
  LevelMismatch,
  NotDivisible,
  ArityMismatch,
  DimensionMismatch,
  NotInvertible,
  CounitConditionFailed,
  NotCoassociative,
  NotClosed,
  NotBijective,
  NotPrimitive,
  BadParameter,
  NotACocycle,
  OrderMismatch,
  PowerNotInner,
  PreconditionFailed,
  SolverFailed,
  NotInE,
  NoSuitablePrime,
  BadCase,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qhopf
