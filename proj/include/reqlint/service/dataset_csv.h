#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/evaluation/ground_truth.h"

namespace reqlint::service {

// Canonical header order: text, project, then the nine smell columns.
const std::array<std::string_view, 11>& dataset_columns();

struct RowError {
  std::size_t line = 0;  // 1-based line where the record starts
  std::string reason;
};

struct DatasetImport {
  std::vector<evaluation::GroundTruthRecord> records;
  std::vector<RowError> errors;
};

// Header names are matched case-insensitively and may come in any order.
// Throws Error(kMissingColumn) when a canonical column is absent and
// Error(kFormatError) for unknown or repeated columns. Bad rows are
// collected in `errors`; the rest are returned.
DatasetImport parse_dataset_csv(std::string_view content);

// Smell cell grammar: "-" or terms joined by '*'. Throws Error(kInvalidTerm)
// for a blank term or a term holding '*'.
std::vector<std::string> parse_smell_cell(std::string_view cell);
std::string format_smell_cell(const std::vector<std::string>& terms);

// Canonical order, RFC 4180 quoting. No records gives the header alone.
std::string format_dataset_csv(const std::vector<evaluation::GroundTruthRecord>& records);

}  // namespace reqlint::service
