#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcda {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  NotNormalized,
  NotMonotone,
  EmptyGenerator,
  TooLarge,
  BadWeights,
  UnknownLevel,
  DegenerateEndpoints,
  MissingRatio,
  OutOfRange,
  NotZeroOne,
  IncompleteAct,
  SameCriterion,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every precondition or domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcda
