#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcl {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  IndexOutOfRange,
  DimensionMismatch,
  NotSkewSymmetric,
  NotBlockDiagonal,
  NonPositiveD,
  SingularC,
  NotSkewSymmetrizable,
  NotDivisible,
  DivisionByZero,
  NotQCommuting,
  NonIntegerExponent,
  TorusMismatch,
  Overflow,
  Integrity,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qcl
