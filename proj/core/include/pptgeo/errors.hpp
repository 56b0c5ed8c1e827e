#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pptgeo {

enum class ErrorCode {
  kNotHermitian,
  kNoConvergence,
  kDimensionMismatch,
  kNotNormalized,
  kInvalidState,
  kInvalidArgument,
  kShellUnreachable,
  kUnsupportedDim,
  kInvalidEigenvalues,
  kMultiplicityNegative,
  kParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pptgeo
