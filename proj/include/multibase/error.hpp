#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multibase {

enum class ErrorCode {
  ParseError,
  ZeroPolynomial,
  NoRootInWindow,
  MultipleRootsInWindow,
  NotIrreducible,
  DivisionByZero,
  FieldMismatch,
  InvalidBase,
  DigitOutOfRange,
  HorizonExceeded,
  AlphaUndecided,
  BaseOutOfWindow,
  InvalidFamily,
  NoRoot,
  OutOfInterval,
  VerificationFailed,
};

/// Stable machine-readable name, e.g. "NoRootInWindow".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace multibase
