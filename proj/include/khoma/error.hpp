#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace khoma {

/// Stable error codes. The CLI prints these verbatim, so never renumber or rename.
enum class ErrorCode {
  MalformedToken,
  ArcLabelUsedWrongMultiplicity,
  InconsistentOrientation,
  StateSpaceTooLarge,
  NotAKnot,
  SiteMismatch,
  AmbiguousEmbedding,
  SameComponent,
  ComponentOutOfRange,
  MalformedEdge,
  DifferentialNotSquareZero,
  NotDivisible,
  RingMismatch,
  NotGraded,
  NotPositive,
  Malformed,
  IndexOutOfRange,
  EdgeNotFound,
  InvalidArgument,
  Overflow,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::ArcLabelUsedWrongMultiplicity: return "ArcLabelUsedWrongMultiplicity";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::SiteMismatch: return "SiteMismatch";
    case ErrorCode::AmbiguousEmbedding: return "AmbiguousEmbedding";
    case ErrorCode::SameComponent: return "SameComponent";
    case ErrorCode::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorCode::MalformedEdge: return "MalformedEdge";
    case ErrorCode::DifferentialNotSquareZero: return "DifferentialNotSquareZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EdgeNotFound: return "EdgeNotFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace khoma
