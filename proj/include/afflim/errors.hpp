#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace afflim {

enum class ErrorCode {
  InvalidArgument,
  InvalidRank,
  IndexOutOfRange,
  DimensionMismatch,
  ZeroVector,
  NotInCorootLattice,
  NotReduced,
  NotReducedInput,
  PeriodNotFound,
  NoTranslationPower,
  UnsupportedType,
  NotPermutation,
  PathNotFound,
  NoConvergence,
  BudgetExceeded,
  NoBranchNode,
  Internal,
};

std::string_view error_name(ErrorCode code);

/// The single exception type thrown by the library; `code()` carries the
/// domain error name, `what()` the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace afflim
