#include <doctest.h>

#include <sstream>

#include "reqlint/common/strings.h"
#include "reqlint/text/lemmatizer.h"
#include "reqlint/text/pipeline.h"
#include "support/test_data.h"

using namespace reqlint;
using text::Lemmatizer;

namespace {

const Lemmatizer& lem() { return *Lemmatizer::default_instance(); }

}  // namespace

TEST_CASE("examples") {
  CHECK(lem().lemmatize("calls") == "call");
  CHECK(lem().lemmatize("cat") == "cat");
  CHECK(lem().lemmatize("types") == "type");
  CHECK(lem().lemmatize("Zeppelinoids") == "zeppelinoids");
}

TEST_CASE("inflection oracle table") {
  const auto rows = split(testing::read_data("lemma_oracle.tsv"), '\n');
  std::size_t total = 0;
  std::size_t wrong = 0;
  std::ostringstream misses;
  for (const auto& line : rows) {
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split(line, '\t');
    REQUIRE(cols.size() == 3);
    const std::string tag = cols[1] == "-" ? "" : cols[1];
    const auto got = lem().lemmatize(cols[0], tag);
    ++total;
    if (got != cols[2]) {
      ++wrong;
      misses << cols[0] << "/" << cols[1] << " -> " << got << " (want " << cols[2] << ")\n";
    }
  }
  CHECK(total >= 200);
  const double accuracy = 1.0 - static_cast<double>(wrong) / total;
  MESSAGE("lemma oracle accuracy " << format_fixed(accuracy) << " over " << total << " pairs\n"
                                   << misses.str());
  CHECK(accuracy >= 0.98);
}

TEST_CASE("lemmas are fixed points") {
  const auto rows = split(testing::read_data("lemma_oracle.tsv"), '\n');
  for (const auto& line : rows) {
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split(line, '\t');
    const std::string tag = cols[1] == "-" ? "" : cols[1];
    const auto once = lem().lemmatize(cols[0], tag);
    CHECK(lem().lemmatize(once, tag) == once);
    CHECK(lem().lemmatize(once) == lem().lemmatize(lem().lemmatize(once)));
  }
  // Every word of a realistic paragraph, tagged and untagged.
  const auto analysis = text::Analyzer::default_instance().analyze(
      "The drivers were stopping the trains while the controllers called the stations. "
      "Bigger batteries shall be used; the happiest users wrote better reviews of the libraries.");
  for (const auto& t : analysis.tokens) {
    if (!t.is_word) continue;
    CHECK(!t.lemma.empty());
    CHECK(lem().lemmatize(t.lemma, t.tag) == t.lemma);
    const auto bare = lem().lemmatize(t.surface);
    CHECK(lem().lemmatize(bare) == bare);
  }
}

TEST_CASE("custom tables") {
  const Lemmatizer small("noun\tgoose\nverb\twalk\n# comment\nadj\tred\n", "noun\tgeese\tgoose\n");
  CHECK(small.lemmatize("geese") == "goose");
  CHECK(small.lemmatize("walked", "VBD") == "walk");
  CHECK(small.lemmatize("redder", "JJR") == "red");
  CHECK(small.lemmatize("walks") == "walk");
  CHECK(small.lemmatize("unknowns") == "unknowns");
  CHECK(small.is_base_form("Goose"));
}
