#include "pcmi/error.hpp"

namespace pcmi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kOrderTooSmall: return "OrderTooSmall";
    case ErrorCode::kNonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::kReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kDiagonalEntry: return "DiagonalEntry";
    case ErrorCode::kUnitEntry: return "UnitEntry";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kInconsistentBase: return "InconsistentBase";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<EntryLocation> entry,
             std::optional<TextLocation> text)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message),
      entry_(entry),
      text_(text) {}

}  // namespace pcmi
