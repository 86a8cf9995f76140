#include <doctest.h>

#include "reqlint/common/csv.h"
#include "reqlint/common/error.h"

using namespace reqlint;

TEST_CASE("csv parses plain and quoted fields") {
  const auto rows = csv::parse("a,b,c\n\"x, y\",\"say \"\"hi\"\"\",\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].fields == std::vector<std::string>{"a", "b", "c"});
  CHECK(rows[1].fields == std::vector<std::string>{"x, y", "say \"hi\"", ""});
  CHECK(rows[1].line == 2);
}

TEST_CASE("csv keeps embedded newlines and tracks line numbers") {
  const auto rows = csv::parse("h\r\n\"one\ntwo\"\r\nlast");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].fields[0] == "one\ntwo");
  CHECK(rows[2].line == 4);
}

TEST_CASE("csv skips BOM, blank lines and comments") {
  const auto rows = csv::parse("\xEF\xBB\xBF# note\n\nterm,smell\n# more\ncall,S9\n", '#');
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].fields[0] == "term");
  CHECK(rows[1].line == 5);
}

TEST_CASE("csv reports malformed quoting with a line number") {
  try {
    csv::parse("a,b\n\"open,c\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFormatError);
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(csv::parse("ab\"c\n"), Error);
  CHECK_THROWS_AS(csv::parse("\"ab\"c\n"), Error);
}

TEST_CASE("csv escape quotes only when needed and round-trips") {
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::escape("a,b") == "\"a,b\"");
  CHECK(csv::escape("q\"") == "\"q\"\"\"");
  const std::vector<std::string> fields = {"x,y", "line\nbreak", "\"", "", "-"};
  const auto rows = csv::parse(csv::format_row(fields));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].fields == fields);
}
