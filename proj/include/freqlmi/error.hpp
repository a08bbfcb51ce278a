#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freqlmi {

enum class ErrorCode {
  DegreeTooSmall,
  ZeroPolynomial,
  ZeroDenominator,
  ZeroDirection,
  SizeTooSmall,
  NotSymmetric,
  NotDefinite,
  NotNormalized,
  NotStable,
  OriginOnCurve,
  BadRange,
  BadArgument,
  ParseError,
  InternalInconsistency,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by every module. `code()` names the failure; the
/// CLI reports it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace freqlmi
