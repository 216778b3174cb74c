#pragma once

#include <stdexcept>
#include <string>

namespace bipgirth {

enum class ErrorCode {
  SameSideEdge,
  IndexOutOfRange,
  NullDigraph,
  EvenDistance,
  MixedSideSet,
  PreconditionViolated,
  InfeasibleDegree,
  InfeasibleConfig,
  InfeasibleTriple,
  CaseNotApplicable,
  HypothesisViolated,
  BadEdgeSets,
  UnknownFact,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SameSideEdge: return "SameSideEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NullDigraph: return "NullDigraph";
    case ErrorCode::EvenDistance: return "EvenDistance";
    case ErrorCode::MixedSideSet: return "MixedSideSet";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::InfeasibleConfig: return "InfeasibleConfig";
    case ErrorCode::InfeasibleTriple: return "InfeasibleTriple";
    case ErrorCode::CaseNotApplicable: return "CaseNotApplicable";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BadEdgeSets: return "BadEdgeSets";
    case ErrorCode::UnknownFact: return "UnknownFact";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bipgirth
