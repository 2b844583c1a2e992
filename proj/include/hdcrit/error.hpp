#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdcrit {

enum class ErrorCode {
  ShapeMismatch,
  NotSquare,
  ConvergenceFailure,
  DegenerateAtEndpoint,
  IllConditioned,
  DegreeOverflow,
  WrongDegree,
  NonGenericData,
  SolverFailure,
  OnDiscriminant,
  RankTooSmall,
  DegenerateSpectrum,
  DegenerateY,
  InvalidArgument,
  ParseError,
  VerificationFailure,
};

std::string_view to_string(ErrorCode code);

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
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DegenerateAtEndpoint: return "DegenerateAtEndpoint";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::NonGenericData: return "NonGenericData";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::OnDiscriminant: return "OnDiscriminant";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::DegenerateY: return "DegenerateY";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

}  // namespace hdcrit
