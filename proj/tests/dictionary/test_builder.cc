#include <doctest.h>

#include <algorithm>

#include "reqlint/common/error.h"
#include "reqlint/dictionary/builder.h"
#include "support/polysemy_corpora.h"

using namespace reqlint;
using namespace reqlint::dictionary;
using reqlint::testing::planted_docs;
using reqlint::testing::topic_words;

namespace {

DomainCorpus corpus(std::string name, std::vector<Document> docs) {
  DomainCorpus c;
  c.domain = std::move(name);
  c.documents = std::move(docs);
  recount(c);
  return c;
}

DictionaryConfig small_config(std::uint64_t seed) { return reqlint::testing::polysemy_config(seed); }

void append(std::vector<Document>& to, const std::vector<Document>& from) { to.insert(to.end(), from.begin(), from.end()); }

using reqlint::testing::polysemy_corpora;

}  // namespace

TEST_CASE("planted polysemous word ranks below the consistent one") {
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto p = polysemy_corpora(seed);
    const auto dict = build_dictionary(p.cs, {p.finance, p.sport}, small_config(seed));
    const auto* bank = dict.find("bank");
    const auto* cpu = dict.find("cpu");
    REQUIRE(bank);
    REQUIRE(cpu);
    wins += bank->mean < cpu->mean;
  }
  MESSAGE("planted-word wins: " << wins << "/20");
  CHECK(wins >= 19);
}

TEST_CASE("ranking invariants and determinism") {
  const auto p = polysemy_corpora(3);
  auto cfg = small_config(3);
  cfg.threads = 1;
  const auto one = build_dictionary(p.cs, {p.finance, p.sport}, cfg);
  cfg.threads = 4;
  const auto four = build_dictionary(p.cs, {p.finance, p.sport}, cfg);
  CHECK(export_ranking_csv(one) == export_ranking_csv(four));
  CHECK(one.domains == std::vector<std::string>{"FIN", "SPT"});
  REQUIRE(!one.rows.empty());
  for (std::size_t i = 0; i + 1 < one.rows.size(); ++i) CHECK(one.rows[i].mean <= one.rows[i + 1].mean);
  for (const auto& r : one.rows) {
    double lo = 2, hi = -2;
    for (const auto& s : r.similarity) {
      if (!s) continue;
      lo = std::min(lo, *s);
      hi = std::max(hi, *s);
    }
    CHECK(lo <= r.mean + 1e-12);
    CHECK(r.mean <= hi + 1e-12);
    CHECK(r.candidate == (r.mean <= one.threshold));
  }
}

TEST_CASE("words missing from a domain are skipped for that domain") {
  // "solo" only occurs in computer science, so it has no prefixed twin.
  Rng rng(1);
  std::vector<Document> cs_docs = planted_docs(rng, topic_words("hw", 10), {"shared"}, 80, 8);
  append(cs_docs, planted_docs(rng, topic_words("hw", 10), {"solo"}, 40, 8));
  const auto cs = corpus("CS", cs_docs);
  const auto a = corpus("A", planted_docs(rng, topic_words("hw", 10), {"shared"}, 80, 8));
  const auto b = corpus("B", planted_docs(rng, topic_words("x", 10), {"shared", "solo"}, 80, 8));
  const auto dict = build_dictionary(cs, {a, b}, small_config(1));
  const auto* solo = dict.find("solo");
  REQUIRE(solo);
  CHECK(!solo->similarity[0]);
  CHECK(solo->similarity[1]);
  CHECK(solo->available() == 1);
  CHECK(solo->mean == *solo->similarity[1]);
}

TEST_CASE("no other corpora") {
  const auto p = polysemy_corpora(1);
  try {
    build_dictionary(p.cs, {}, small_config(1));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoOtherCorpora);
  }
}

TEST_CASE("ranking csv, labels, lexicon export") {
  const std::string csv =
      "word,SS,LW,mean,smell\n"
      "call,0.25,0.10,0.175,\n"
      "cpu,0.90,,0.9,\n"
      "part,0.26,0.15,0.205,S1\n";
  auto dict = parse_ranking_csv(csv);
  REQUIRE(dict.rows.size() == 3);
  CHECK(dict.rows[0].word == "call");
  CHECK(dict.rows[0].mean == doctest::Approx(0.175));
  CHECK(dict.find("cpu")->available() == 1);
  CHECK(dict.candidate_count() == 2);
  CHECK(dict.find("part")->label == smells::SmellType::kSubjectiveLanguage);

  const auto cand = export_candidates_csv(dict);
  CHECK(cand.find("cpu") == std::string::npos);
  apply_labels(dict, "word,mean,smell\ncall,0.175,S9\npart,0.205,\n");
  CHECK(dict.find("call")->label == smells::SmellType::kPolysemy);
  CHECK(!dict.find("part")->label);
  CHECK_THROWS_AS(apply_labels(dict, "word,mean,smell\ncall,0.1,S5\n"), Error);
  CHECK_THROWS_AS(apply_labels(dict, "word,mean,smell\nzeppelin,0.1,S9\n"), Error);

  const auto lex = to_lexicon(dict);
  REQUIRE(lex.size() == 1);
  CHECK(lex.find("call")->mean_similarity == doctest::Approx(0.175));
  CHECK(lex.provenance() == smells::LexiconProvenance::kAutoBuilt);

  const auto again = parse_ranking_csv(export_ranking_csv(dict));
  CHECK(export_ranking_csv(again) == export_ranking_csv(dict));
}

TEST_CASE("threshold sensitivity") {
  const std::string csv =
      "word,A,B,C,mean,smell\n"
      "call,0.1,0.2,0.3,0.2,S9\n"
      "assoc,0.5,0.6,0.7,0.6,S9\n"
      "cpu,0.9,0.9,0.9,0.9,\n";
  const auto dict = parse_ranking_csv(csv, 0.6);
  const auto rows = threshold_sensitivity(dict);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].excluded.empty());
  CHECK(rows[0].boundary == doctest::Approx(0.6));
  CHECK(rows[1].excluded == "A");
  CHECK(rows[1].boundary == doctest::Approx(0.65));
  CHECK(rows[1].delta == doctest::Approx(0.05));
  CHECK(rows[1].changed == 1);
  CHECK(rows[3].boundary == doctest::Approx(0.55));
  CHECK(rows[3].changed == 0);
  CHECK(export_sensitivity_csv(rows).find("all domains except B") != std::string::npos);
}
