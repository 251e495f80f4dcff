#ifndef FAIRAGG_ERRORS_HPP_
#define FAIRAGG_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairagg {

enum class ErrorCode {
  kConstantValueFunction,
  kUnknownCell,
  kUnknownOutcome,
  kFractionOutOfRange,
  kPartitionMismatch,
  kInvalidProbability,
  kEmptyWeightSet,
  kInvalidWeight,
  kNotGrounded,
  kComparatorOnly,
  kInvalidVector,
  kNotSupportFunction,
  kDimensionMismatch,
  kNotInessential,
  kInvalidConfig,
  kParseError,
  kInvalidProblem,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairagg

#endif  // FAIRAGG_ERRORS_HPP_
