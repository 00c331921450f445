#include "structura/error.hpp"

namespace structura {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::RootAtA: return "RootAtA";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MalformedPrescription: return "MalformedPrescription";
    case ErrorCode::ImpossibleSquareCase: return "ImpossibleSquareCase";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::FieldNotSplit: return "FieldNotSplit";
    case ErrorCode::MajorizationFails: return "MajorizationFails";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::CompletionSearchExhausted: return "CompletionSearchExhausted";
    case ErrorCode::NonMonicDiagonal: return "NonMonicDiagonal";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace structura
