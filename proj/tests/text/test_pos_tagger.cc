#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <map>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"
#include "reqlint/text/pos_tagger.h"
#include "reqlint/text/tokenizer.h"
#include "support/test_data.h"

using namespace reqlint;
using text::PerceptronTagger;

namespace {

std::vector<std::string> tags_of(std::string_view s) {
  auto tokens = text::tokenize(s);
  PerceptronTagger::default_instance()->tag(tokens, 0, tokens.size());
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.tag);
  return out;
}

}  // namespace

TEST_CASE("smell-relevant tags") {
  CHECK(tags_of("highest")[0] == "JJS");
  const auto more_exact = tags_of("The more exact value");
  CHECK((more_exact[1] == "RBR" || more_exact[1] == "JJR"));
  CHECK(more_exact[2] == "JJ");
  CHECK(tags_of("The user may")[2] == "MD");
  CHECK(tags_of("A message can include several segments.")[2] == "MD");
  CHECK(tags_of("The operator must not sign off")[3] == "RB");
  CHECK(tags_of("for faster execution of pages")[1].substr(0, 2) != "NN");
}

TEST_CASE("accuracy on the hand-tagged requirements corpus") {
  const auto gold = text::parse_tagged_corpus(testing::read_data("pos_gold.tsv"));
  REQUIRE(gold.size() >= 40);
  const auto& tagger = *PerceptronTagger::default_instance();
  std::size_t right = 0, total = 0;
  // Classes the smell rules depend on; merged where the rules do not care.
  const auto family = [](const std::string& t) -> std::string {
    if (t == "JJS" || t == "RBS") return "SUP";
    if (t == "JJR" || t == "RBR") return "CMP";
    if (t == "WDT" || t == "WP") return "WH";
    if (t == "MD") return "MD";
    return "";
  };
  std::size_t cue_right = 0, cue_total = 0;
  for (const auto& s : gold) {
    const auto tags = tagger.tag(s.words);
    for (std::size_t i = 0; i < tags.size(); ++i) {
      right += tags[i] == s.tags[i];
      ++total;
      if (!family(s.tags[i]).empty()) {
        ++cue_total;
        cue_right += family(tags[i]) == family(s.tags[i]);
      }
    }
  }
  const double accuracy = static_cast<double>(right) / total;
  const double cue_accuracy = static_cast<double>(cue_right) / cue_total;
  MESSAGE("tagger accuracy " << format_fixed(accuracy) << " on " << total << " tokens; smell-cue classes "
                             << format_fixed(cue_accuracy) << " on " << cue_total);
  CHECK(accuracy >= 0.90);
  CHECK(cue_accuracy >= 0.95);
}

TEST_CASE("training, serialization and determinism") {
  const auto corpus = text::parse_tagged_corpus(
      "the\tDT\ndog\tNN\nruns\tVBZ\n.\t.\n\n"
      "a\tDT\ncat\tNN\nsleeps\tVBZ\n.\t.\n\n"
      "the\tDT\ncat\tNN\nruns\tVBZ|NNS\n.\t.\n");
  REQUIRE(corpus.size() == 3);
  CHECK(corpus[2].tags[2] == "VBZ");
  text::TaggerTrainingOptions opts;
  opts.tagdict_min_count = 100;  // force the model path
  const auto a = PerceptronTagger::train(corpus, opts);
  const auto b = PerceptronTagger::train(corpus, opts);
  CHECK(a.serialize() == b.serialize());
  CHECK(a.tag({"the", "dog", "sleeps", "."}) == std::vector<std::string>{"DT", "NN", "VBZ", "."});

  const auto bytes = a.serialize();
  CHECK(bytes.substr(0, 5) == "RQLT1");
  const auto c = PerceptronTagger::deserialize(bytes);
  CHECK(c.serialize() == bytes);
  CHECK(c.classes() == a.classes());

  const auto path = std::filesystem::temp_directory_path() / "reqlint_tagger_test.bin";
  a.save(path);
  CHECK(PerceptronTagger::load(path)->serialize() == bytes);
  std::filesystem::remove(path);
}

TEST_CASE("bad weight files are rejected") {
  const auto good = PerceptronTagger::train(text::parse_tagged_corpus("a\tDT\nb\tNN\n")).serialize();
  const auto expect_format_error = [](const std::string& bytes) {
    try {
      PerceptronTagger::deserialize(bytes);
      FAIL("expected FormatError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kFormatError);
    }
  };
  expect_format_error("RQLT0" + good.substr(5));
  expect_format_error(good.substr(0, good.size() - 1));
  expect_format_error(good + "x");
  std::string bad_version = good;
  bad_version[5] = 9;
  expect_format_error(bad_version);
  CHECK_THROWS_AS(text::parse_tagged_corpus("word-without-tag\n"), Error);
}

TEST_CASE("tagging is deterministic") {
  const std::string s = "The system shall not display the most recent value which was stored.";
  CHECK(tags_of(s) == tags_of(s));
}
