#include "reqlint/common/csv.h"

#include "reqlint/common/error.h"

namespace reqlint::csv {

std::vector<Record> parse(std::string_view text, char comment) {
  std::vector<Record> records;
  std::size_t i = 0;
  std::size_t line = 1;
  const std::size_t n = text.size();

  if (n >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
      static_cast<unsigned char>(text[1]) == 0xBB && static_cast<unsigned char>(text[2]) == 0xBF) {
    i = 3;
  }

  while (i < n) {
    // Skip blank and comment lines at record start.
    if (text[i] == '\n') {
      ++i;
      ++line;
      continue;
    }
    if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') {
      i += 2;
      ++line;
      continue;
    }
    if (comment != '\0' && text[i] == comment) {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }

    Record rec;
    rec.line = line;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool done = false;
    while (!done) {
      if (i >= n) {
        if (in_quotes) {
          throw Error(ErrorCode::kFormatError, "unterminated quoted field", rec.line);
        }
        rec.fields.push_back(std::move(field));
        break;
      }
      const char c = text[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            in_quotes = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field += c;
          ++i;
        }
        continue;
      }
      switch (c) {
        case '"':
          if (!field.empty() || field_was_quoted) {
            throw Error(ErrorCode::kFormatError, "stray quote inside unquoted field", line);
          }
          in_quotes = true;
          field_was_quoted = true;
          ++i;
          break;
        case ',':
          rec.fields.push_back(std::move(field));
          field.clear();
          field_was_quoted = false;
          ++i;
          break;
        case '\r':
          if (i + 1 < n && text[i + 1] == '\n') ++i;
          [[fallthrough]];
        case '\n':
          rec.fields.push_back(std::move(field));
          ++i;
          ++line;
          done = true;
          break;
        default:
          if (field_was_quoted) {
            throw Error(ErrorCode::kFormatError, "text after closing quote", line);
          }
          field += c;
          ++i;
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape(fields[i]);
  }
  out += '\n';
  return out;
}

}  // namespace reqlint::csv
