#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

enum class ErrorCode {
  InvalidArgument,
  InvalidWeightType,
  ZeroSpace,
  NonExactDivision,
  DivisionByZero,
  DimensionMismatch,
  IndexOutOfRange,
  NotInvariant,
  NotMonic,
  ConstructionInconsistent,
  DeltaNotInjective,
  CrosscheckMismatch,
  EmptyLevelOne,
  UnsupportedFormat,
  ParseError,
  Internal,
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

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace hecke
