#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valext {

enum class ErrorCode {
  LengthMismatch,
  NotFiniteIndex,
  NotNested,
  InvalidFrame,
  InvalidPmt,
  PreconditionViolated,
  BudgetExceeded,
  MalformedRelation,
  NonIntegralDefect,
  MissingData,
  InvalidRecord,
  InconsistentFamily,
  UnstableCount,
  OracleRange,
  InvalidInput,
  NotFound,
};

inline std::string_view error_name(ErrorCode code);

/// Single exception type for all library failures; `code()` is the
/// machine-readable identity used by the CLI error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotFiniteIndex: return "NotFiniteIndex";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::InvalidPmt: return "InvalidPmt";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MalformedRelation: return "MalformedRelation";
    case ErrorCode::NonIntegralDefect: return "NonIntegralDefect";
    case ErrorCode::MissingData: return "MissingData";
    case ErrorCode::InvalidRecord: return "InvalidRecord";
    case ErrorCode::InconsistentFamily: return "InconsistentFamily";
    case ErrorCode::UnstableCount: return "UnstableCount";
    case ErrorCode::OracleRange: return "OracleRange";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

}  // namespace valext
