#include <doctest.h>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"
#include "reqlint/smells/lexicon.h"

using namespace reqlint;
using namespace reqlint::smells;

namespace {

ErrorCode code_of(std::string_view content) {
  try {
    SmellLexicon::parse(content);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::kEmptyText;
}

std::optional<std::size_t> line_of(std::string_view content) {
  try {
    SmellLexicon::parse(content);
  } catch (const Error& e) {
    return e.line();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("entries with and without similarity") {
  const auto lex = SmellLexicon::parse("term,smell,mean_similarity\ncall,S9,0.1078\nas far as possible,S3,\n");
  REQUIRE(lex.size() == 2);
  const auto* call = lex.find("call");
  REQUIRE(call);
  CHECK(call->smell == SmellType::kPolysemy);
  CHECK(call->mean_similarity == doctest::Approx(0.1078));
  const auto* afap = lex.find("As  far as possible");
  REQUIRE(afap);
  CHECK(afap->smell == SmellType::kNonVerifiableTerm);
  CHECK(!afap->mean_similarity);
  CHECK(lex.provenance() == LexiconProvenance::kAutoBuilt);
}

TEST_CASE("empty file") {
  CHECK(SmellLexicon::parse("").empty());
  CHECK(SmellLexicon::parse("# nothing here\n").empty());
  CHECK(SmellLexicon::parse("term,smell\n").empty());
}

TEST_CASE("entry count equals data lines") {
  const auto lex = SmellLexicon::parse("# c\nterm,smell\nalmost,S2\n# more\n\nsufficient,S3\nreturn,S9\n");
  CHECK(lex.size() == 3);
}

TEST_CASE("rejections") {
  CHECK(code_of("term,smell\ncall,S9\nCALL,S1\n") == ErrorCode::kDuplicateKey);
  CHECK(line_of("term,smell\ncall,S9\nCALL,S1\n") == 3u);
  CHECK(code_of("term,smell\nhighest,S4\n") == ErrorCode::kUnknownSmellCode);
  CHECK(code_of("term,smell\nmay,S8\n") == ErrorCode::kUnknownSmellCode);
  CHECK(code_of("term,smell\nfoo,X1\n") == ErrorCode::kUnknownSmellCode);
  CHECK(code_of("word,type\nfoo,S1\n") == ErrorCode::kFormatError);
  CHECK(code_of("term,smell\nfoo\n") == ErrorCode::kFormatError);
  CHECK(line_of("term,smell\nok,S1\nfoo\n") == 3u);
  CHECK(code_of("term,smell\na b c d e f,S3\n") == ErrorCode::kFormatError);
  CHECK(code_of("term,smell,mean_similarity\nfoo,S9,1.5\n") == ErrorCode::kFormatError);
  CHECK(code_of("term,smell,mean_similarity\nfoo,S9,abc\n") == ErrorCode::kFormatError);
  CHECK(code_of("term,smell\n  ,S9\n") == ErrorCode::kFormatError);
  CHECK(code_of("# provenance: crowd\nterm,smell\n") == ErrorCode::kFormatError);
}

TEST_CASE("constructor validates like the parser") {
  CHECK_THROWS_AS(SmellLexicon({{"best", SmellType::kSuperlative, {}}}, LexiconProvenance::kHandMade), Error);
  CHECK_THROWS_AS(SmellLexicon({{"a", SmellType::kPolysemy, {}}, {"A", SmellType::kPolysemy, {}}},
                               LexiconProvenance::kHandMade),
                  Error);
}

TEST_CASE("serialize round-trip and version") {
  const auto lex = SmellLexicon::parse(
      "# provenance: hand_made\nterm,smell,mean_similarity\nzeta,S1,\nalpha term,S9,-0.25\n\"a, b\",S2,\n");
  CHECK(lex.provenance() == LexiconProvenance::kHandMade);
  CHECK(lex.entries().front().term == "a, b");
  const auto again = SmellLexicon::parse(lex.serialize());
  CHECK(again.serialize() == lex.serialize());
  CHECK(again.version() == lex.version());
  CHECK(again.provenance() == LexiconProvenance::kHandMade);

  const auto other = SmellLexicon::parse("term,smell\nzeta,S1\nalpha term,S9\n");
  CHECK(other.version() != lex.version());
  CHECK(lex.version().size() == 16);
}

TEST_CASE("bundled lexicons load") {
  const auto& def = SmellLexicon::default_lexicon();
  CHECK(def.size() > 25);
  REQUIRE(def.find("call"));
  CHECK(def.find("call")->mean_similarity == doctest::Approx(0.1078));
  CHECK(def.find("user friendly"));
  const auto& hand = SmellLexicon::hand_made_lexicon();
  CHECK(hand.provenance() == LexiconProvenance::kHandMade);
  CHECK(hand.find("as far as possible"));
  for (const auto& e : hand.entries()) CHECK(is_lexicon_smell(e.smell));
}

TEST_CASE("longest match prefers the longer key") {
  const auto lex = SmellLexicon::parse("term,smell\ncall,S9\ncall group,S1\n");
  std::vector<text::Token> toks(3);
  const char* words[] = {"Call", "groups", "now"};
  const char* lemmas[] = {"call", "group", "now"};
  for (int i = 0; i < 3; ++i) {
    toks[i].surface = words[i];
    toks[i].lemma = lemmas[i];
    toks[i].is_word = true;
  }
  const auto none = [](std::size_t) { return false; };
  auto m = lex.longest_match(toks, 0, none);
  REQUIRE(m);
  CHECK(m->last == 2);
  CHECK(m->entry->term == "call group");
  // A blocked token cuts the key short.
  m = lex.longest_match(toks, 0, [](std::size_t i) { return i == 1; });
  REQUIRE(m);
  CHECK(m->entry->term == "call");
  CHECK(!lex.longest_match(toks, 2, none));
  // Punctuation ends a key.
  toks[1].is_word = false;
  m = lex.longest_match(toks, 0, none);
  REQUIRE(m);
  CHECK(m->last == 1);
}

TEST_CASE("surface or lemma may match") {
  const auto lex = SmellLexicon::parse("term,smell\nleading,S1\nlead,S9\n");
  std::vector<text::Token> toks(1);
  toks[0].surface = "Leading";
  toks[0].lemma = "lead";
  toks[0].is_word = true;
  const auto m = lex.longest_match(toks, 0, [](std::size_t) { return false; });
  REQUIRE(m);
  // Equal length: the smaller smell code wins.
  CHECK(m->entry->term == "leading");
}
