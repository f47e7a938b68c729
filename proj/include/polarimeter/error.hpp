#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polarimeter {

enum class ErrorCode {
  LengthMismatch,
  NonIntegralPopulation,
  DuplicateCharacteristic,
  TooFewGroups,
  NonFiniteValue,
  NegativeDistance,
  OutOfDomain,
  InvalidAlienation,
  NegativeAlpha,
  NonPositiveLambda,
  EmptyGrid,
  GridTooSmall,
  UnsortedGrid,
  EmptyProbeLists,
  InvalidConfig,
  InvalidPlan,
  DomainError,
  NotStabilized,
  NoSignChange,
  OddCentralGroup,
  InvalidArgument,
  IoError,
  ParseError,
  GrammarError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures surface as this exception. `group()` is set by
// distribution validation (0-based group index); `line()` by file parsers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> group = std::nullopt,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> group() const noexcept { return group_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> group_;
  std::optional<std::size_t> line_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace polarimeter
