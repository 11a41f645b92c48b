#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace assign {

enum class ErrorCode {
  kNonSquare,
  kNegativeCost,
  kDimensionMismatch,
  kPermutationInvalid,
  kOverflow,
  kInstanceTooLarge,
  kNoUncoveredCell,
  kExpandComplete,
  kInvalidRange,
  kInsufficientData,
  kSyntaxError,
  kNonIntegerCost,
  kUnknownSolver,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// distinguishes the cause so callers (the CLI in particular) can map it to an
// exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace assign
