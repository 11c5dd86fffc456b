#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsa {

enum class ErrorCode {
  DimensionMismatch,
  FieldMismatch,
  InvalidParams,
  ParseError,
  IncompleteCandidates,
  AmbiguousSolution,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IncompleteCandidates: return "IncompleteCandidates";
    case ErrorCode::AmbiguousSolution: return "AmbiguousSolution";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so the
// CLI can report a stable, machine-parsable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fsa
