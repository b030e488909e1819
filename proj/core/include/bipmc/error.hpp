#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bipmc {

enum class ErrorCode {
  kInvalidEdge,
  kNotPresent,
  kNotATree,
  kTrivialTree,
  kNotMatchingCovered,
  kNoSuchCycle,
  kPreconditionFailed,
  kDegreeTooLow,
  kNotMinimal,
  kNotDegreeTwo,
  kParallelNeighbors,
  kRestrictionViolated,
  kBadPartition,
  kNotFound,
  kNotBalanced2Cut,
  kBadParams,
  kDegreeMismatch,
  kNotKExtendable,
  kNotMinimalKExtendable,
  kTooLarge,
  kBudgetExceeded,
  kInvariantViolation,
  kParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bipmc
