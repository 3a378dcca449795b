#include "hecke/error.hpp"

namespace hecke {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidWeightType: return "InvalidWeightType";
    case ErrorCode::ZeroSpace: return "ZeroSpace";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ConstructionInconsistent: return "ConstructionInconsistent";
    case ErrorCode::DeltaNotInjective: return "DeltaNotInjective";
    case ErrorCode::CrosscheckMismatch: return "CrosscheckMismatch";
    case ErrorCode::EmptyLevelOne: return "EmptyLevelOne";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace hecke
