#include "stackprod/error.hpp"

namespace stackprod {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kNonPositiveRate: return "NonPositiveRate";
    case ErrorCode::kNonPositiveQuantity: return "NonPositiveQuantity";
    case ErrorCode::kNonPositiveBudget: return "NonPositiveBudget";
    case ErrorCode::kTrivialFollower: return "TrivialFollower";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInfeasibleStrategy: return "InfeasibleStrategy";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kNotSemiBalanced: return "NotSemiBalanced";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kZeroResolution: return "ZeroResolution";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace stackprod
