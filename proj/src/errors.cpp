#include "afflim/errors.hpp"

namespace afflim {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotInCorootLattice: return "NotInCorootLattice";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotReducedInput: return "NotReducedInput";
    case ErrorCode::PeriodNotFound: return "PeriodNotFound";
    case ErrorCode::NoTranslationPower: return "NoTranslationPower";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::PathNotFound: return "PathNotFound";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoBranchNode: return "NoBranchNode";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace afflim
