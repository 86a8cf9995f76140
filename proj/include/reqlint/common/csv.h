#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace reqlint::csv {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line where the record starts
};

// RFC 4180 reader: quoted fields may hold commas, doubled quotes and line
// breaks; CRLF and LF are both accepted. Blank lines are skipped. When
// `comment` is non-zero, lines starting with it (outside quotes) are skipped.
std::vector<Record> parse(std::string_view text, char comment = '\0');

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);
std::string format_row(const std::vector<std::string>& fields);

}  // namespace reqlint::csv
