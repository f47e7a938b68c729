#include "polarimeter/error.hpp"

namespace polarimeter {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonIntegralPopulation: return "NonIntegralPopulation";
    case ErrorCode::DuplicateCharacteristic: return "DuplicateCharacteristic";
    case ErrorCode::TooFewGroups: return "TooFewGroups";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::InvalidAlienation: return "InvalidAlienation";
    case ErrorCode::NegativeAlpha: return "NegativeAlpha";
    case ErrorCode::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::UnsortedGrid: return "UnsortedGrid";
    case ErrorCode::EmptyProbeLists: return "EmptyProbeLists";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::OddCentralGroup: return "OddCentralGroup";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GrammarError: return "GrammarError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> group,
             std::optional<std::size_t> line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      group_(group),
      line_(line),
      detail_(message) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace polarimeter
