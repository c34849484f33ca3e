#pragma once

#include <stdexcept>
#include <string>

namespace stackprod {

enum class ErrorCode {
  kParse,
  kEmptyInstance,
  kNonPositiveRate,
  kNonPositiveQuantity,
  kNonPositiveBudget,
  kTrivialFollower,
  kDimensionMismatch,
  kInfeasibleStrategy,
  kEmptySupport,
  kNotSemiBalanced,
  kTooLarge,
  kZeroResolution,
  kInvalidArgument,
};

// Stable identifier such as "TrivialFollower".
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stackprod
