#pragma once

#include <stdexcept>
#include <string>

namespace structura {

enum class ErrorCode {
  DivisionByZeroPoly,
  BothZero,
  RootAtA,
  KOutOfRange,
  RankDeficient,
  ZeroMatrix,
  DegreeTooSmall,
  DegreeMismatch,
  ShapeMismatch,
  LengthMismatch,
  MalformedPrescription,
  ImpossibleSquareCase,
  SumMismatch,
  FieldNotSplit,
  MajorizationFails,
  SearchExhausted,
  PreconditionViolated,
  CompletionSearchExhausted,
  NonMonicDiagonal,
  Infeasible,
  SingularInput,
  ParseError,
  Internal,
};

const char* error_name(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace structura
