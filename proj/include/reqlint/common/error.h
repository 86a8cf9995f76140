#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reqlint {

// Every failure the library reports carries one of these codes so callers
// (CLI, HTTP layer, tests) can dispatch without string matching.
enum class ErrorCode {
  kEmptyText,
  kFormatError,
  kDuplicateKey,
  kUnknownSmellCode,
  kInvalidCounts,
  kUnknownDomainCode,
  kInvalidStats,
  kDegenerateRange,
  kInvalidArgs,
  kEmptySource,
  kIoError,
  kHttpError,
  kCategoryNotFound,
  kCorpusTooSmall,
  kZeroVector,
  kDimensionMismatch,
  kNoOtherCorpora,
  kLengthMismatch,
  kConstantInput,
  kTooFewSamples,
  kMissingProfile,
  kEmptyDataset,
  kMissingColumn,
  kUnknownProject,
  kUnknownRequirement,
  kInvalidTerm,
  kNoReviewedData,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  // 1-based line number for file-format errors.
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace reqlint
