#pragma once

#include <stdexcept>
#include <string>

namespace lorenz {

enum class ErrorCode {
  EmptyWord,
  SingleLetterWord,
  PeriodicWord,
  ExponentOverflow,
  SyntaxError,
  DuplicateCyclicClass,
  UnknownLabel,
  IndistinguishableBases,
  CapExceeded,
  TieDetected,
  MismatchedInput,
  LayoutViolation,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::SingleLetterWord: return "SingleLetterWord";
    case ErrorCode::PeriodicWord: return "PeriodicWord";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateCyclicClass: return "DuplicateCyclicClass";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::IndistinguishableBases: return "IndistinguishableBases";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TieDetected: return "TieDetected";
    case ErrorCode::MismatchedInput: return "MismatchedInput";
    case ErrorCode::LayoutViolation: return "LayoutViolation";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  explicit Error(ErrorCode code) : Error(code, "") {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace lorenz
