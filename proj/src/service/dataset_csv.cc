#include "reqlint/service/dataset_csv.h"

#include <map>
#include <optional>

#include "reqlint/common/csv.h"
#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"

namespace reqlint::service {

using evaluation::GroundTruthRecord;

const std::array<std::string_view, 11>& dataset_columns() {
  static const std::array<std::string_view, 11> cols = [] {
    std::array<std::string_view, 11> c{"text", "project"};
    for (std::size_t i = 0; i < smells::kAllSmells.size(); ++i) c[i + 2] = smells::smell_column(smells::kAllSmells[i]);
    return c;
  }();
  return cols;
}

std::vector<std::string> parse_smell_cell(std::string_view cell) {
  const auto t = trim(cell);
  if (t == "-" || t.empty()) return {};
  std::vector<std::string> out;
  for (const auto& part : split(t, '*')) {
    const auto term = trim(part);
    if (term.empty()) raise(ErrorCode::kInvalidTerm, "blank term in cell '" + std::string(cell) + "'");
    out.emplace_back(term);
  }
  return out;
}

std::string format_smell_cell(const std::vector<std::string>& terms) {
  if (terms.empty()) return "-";
  for (const auto& t : terms) {
    if (trim(t).empty()) raise(ErrorCode::kInvalidTerm, "blank term");
    if (t.find('*') != std::string::npos) raise(ErrorCode::kInvalidTerm, "term '" + t + "' contains '*'");
  }
  return join(terms, "*");
}

DatasetImport parse_dataset_csv(std::string_view content) {
  // A UTF-8 byte order mark from spreadsheet exports.
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  const auto records = csv::parse(content);
  if (records.empty()) raise(ErrorCode::kMissingColumn, "dataset has no header");

  const auto& cols = dataset_columns();
  std::array<std::optional<std::size_t>, 11> where;
  const auto& header = records.front().fields;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto name = to_lower(trim(header[i]));
    std::size_t c = 0;
    while (c < cols.size() && cols[c] != name) ++c;
    if (c == cols.size()) raise(ErrorCode::kFormatError, "unknown column '" + std::string(trim(header[i])) + "'");
    if (where[c]) raise(ErrorCode::kFormatError, "column '" + name + "' appears twice");
    where[c] = i;
  }
  std::vector<std::string> missing;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!where[c]) missing.emplace_back(cols[c]);
  }
  if (!missing.empty()) raise(ErrorCode::kMissingColumn, "missing column(s): " + join(missing, ", "));

  DatasetImport out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.size()) {
      out.errors.push_back({rec.line, "expected " + std::to_string(header.size()) + " fields, found " +
                                          std::to_string(rec.fields.size())});
      continue;
    }
    GroundTruthRecord g;
    g.text = std::string(trim(rec.fields[*where[0]]));
    g.project = std::string(trim(rec.fields[*where[1]]));
    if (g.text.empty()) {
      out.errors.push_back({rec.line, "requirement text is blank"});
      continue;
    }
    if (g.project.empty()) {
      out.errors.push_back({rec.line, "project is blank"});
      continue;
    }
    std::string reason;
    for (std::size_t c = 2; c < cols.size() && reason.empty(); ++c) {
      try {
        g.terms[c - 2] = parse_smell_cell(rec.fields[*where[c]]);
      } catch (const Error& e) {
        reason = std::string(cols[c]) + ": " + e.what();
      }
    }
    if (reason.empty()) {
      try {
        evaluation::validate_record(g);
      } catch (const Error& e) {
        reason = e.what();
      }
    }
    if (reason.empty()) {
      out.records.push_back(std::move(g));
    } else {
      out.errors.push_back({rec.line, reason});
    }
  }
  return out;
}

std::string format_dataset_csv(const std::vector<GroundTruthRecord>& records) {
  const auto& cols = dataset_columns();
  std::string out = csv::format_row(std::vector<std::string>(cols.begin(), cols.end()));
  for (const auto& r : records) {
    std::vector<std::string> row{r.text, r.project};
    for (const auto& terms : r.terms) row.push_back(format_smell_cell(terms));
    out += csv::format_row(row);
  }
  return out;
}

}  // namespace reqlint::service
