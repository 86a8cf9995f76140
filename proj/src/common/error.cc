#include "reqlint/common/error.h"

namespace reqlint {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kDuplicateKey: return "DuplicateKey";
    case ErrorCode::kUnknownSmellCode: return "UnknownSmellCode";
    case ErrorCode::kInvalidCounts: return "InvalidCounts";
    case ErrorCode::kUnknownDomainCode: return "UnknownDomainCode";
    case ErrorCode::kInvalidStats: return "InvalidStats";
    case ErrorCode::kDegenerateRange: return "DegenerateRange";
    case ErrorCode::kInvalidArgs: return "InvalidArgs";
    case ErrorCode::kEmptySource: return "EmptySource";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kHttpError: return "HttpError";
    case ErrorCode::kCategoryNotFound: return "CategoryNotFound";
    case ErrorCode::kCorpusTooSmall: return "CorpusTooSmall";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNoOtherCorpora: return "NoOtherCorpora";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kConstantInput: return "ConstantInput";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kMissingProfile: return "MissingProfile";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kUnknownProject: return "UnknownProject";
    case ErrorCode::kUnknownRequirement: return "UnknownRequirement";
    case ErrorCode::kInvalidTerm: return "InvalidTerm";
    case ErrorCode::kNoReviewedData: return "NoReviewedData";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> line) {
  std::string out(error_code_name(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace reqlint
