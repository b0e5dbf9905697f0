#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nrad {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotHermitian,
  NotPSD,
  NotUnitVector,
  NoConvergence,
  Overflow,
  UnknownFunction,
  UnknownBound,
  UnknownChain,
  NegativeCoefficient,
  InvalidConfig,
  IoError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; callers
// that need to branch on the failure inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::UnknownBound: return "UnknownBound";
    case ErrorCode::UnknownChain: return "UnknownChain";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace nrad
