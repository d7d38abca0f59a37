#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcmi {

enum class ErrorCode {
  kNonSquare,
  kOrderTooSmall,
  kNonPositiveEntry,
  kNonFiniteEntry,
  kReciprocityViolation,
  kOrderMismatch,
  kInvalidPermutation,
  kDiagonalEntry,
  kUnitEntry,
  kZeroDenominator,
  kInconsistentBase,
  kInvalidArgument,
  kInvalidConfig,
  kParseError,
};

std::string_view to_string(ErrorCode code);

/// Zero-based matrix coordinates attached to an error, when it has one.
struct EntryLocation {
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Position inside a text document (1-based line and column).
struct TextLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<EntryLocation> entry = std::nullopt,
        std::optional<TextLocation> text = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// what() without the "CodeName: " prefix.
  const std::string& message() const noexcept { return message_; }
  const std::optional<EntryLocation>& entry() const noexcept { return entry_; }
  const std::optional<TextLocation>& text_location() const noexcept {
    return text_;
  }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<EntryLocation> entry_;
  std::optional<TextLocation> text_;
};

}  // namespace pcmi
