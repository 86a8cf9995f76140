#include <doctest.h>

#include <cmath>

#include "reqlint/common/csv.h"
#include "reqlint/common/strings.h"
#include "reqlint/testability/scorer.h"

using namespace reqlint;
using namespace reqlint::testability;
using smells::SmellType;

namespace {

const std::map<std::string, AlphaProfile>& profiles() {
  static const auto p = parse_project_profiles(read_file(resource_path("fixtures/sample_projects.csv")));
  return p;
}

// Annotations of the sample dataset row `index` (1-based).
std::pair<std::string, std::vector<AnnotatedTerm>> sample(std::size_t index, std::string* project = nullptr) {
  const auto records = csv::parse(read_file(resource_path("fixtures/sample_requirements.csv")));
  const auto& row = records.at(index).fields;
  std::vector<AnnotatedTerm> terms;
  for (std::size_t c = 2; c < row.size(); ++c) {
    if (row[c] == "-") continue;
    for (const auto& t : split(row[c], '*')) terms.push_back({smells::kAllSmells[c - 2], t});
  }
  if (project) *project = row[1];
  return {row[0], terms};
}

}  // namespace

TEST_CASE("ground-truth scores of the sample requirements") {
  struct Expect {
    std::size_t row;
    double clarity, softened, hardened;
  };
  // Published values, two decimals.
  const std::vector<Expect> expected = {{1, 0.69, 0.21, 0.13}, {2, 0.68, 0.46, 0.39}, {7, 0.61, 0.61, 0.61}};
  for (const auto& e : expected) {
    std::string project;
    const auto [text, terms] = sample(e.row, &project);
    CAPTURE(project);
    const auto a = text::Analyzer::default_instance().analyze(text);
    const auto& p = profiles().at(project);
    const auto soft = score_annotated(a, terms, compute_alpha(p));
    const auto hard = score_annotated(a, terms, compute_alpha(p.with_policy(AlphaPolicy::kHardened)));
    CHECK(std::abs(soft.clarity - e.clarity) <= 0.01);
    CHECK(std::abs(soft.testability - e.softened) <= 0.01);
    CHECK(std::abs(hard.testability - e.hardened) <= 0.01);
    CHECK(soft.clarity == hard.clarity);
  }
}

TEST_CASE("annotated counts") {
  const auto [text, terms] = sample(1);
  const auto a = text::Analyzer::default_instance().analyze(text);
  const auto in = annotated_counts(a, terms);
  CHECK(in.word_count == 60);
  CHECK(in.smelly_count == 6);
  CHECK(in.distinct_smell_types == 2);
  CHECK(a.sentence_count() == 4);
  const auto multi = annotated_counts(a, {{SmellType::kNonVerifiableTerm, "as far as possible"}});
  CHECK(multi.smelly_count == 4);
}

TEST_CASE("detected scores") {
  const auto lex = smells::SmellLexicon::load(resource_path("fixtures/sample_lexicon.csv"));
  const auto r = score_requirement("The system will employ on demand asynchronous loading for faster execution of pages",
                                   lex, smells::PosSmellMap::default_map(), profiles().at("Gamma-J"));
  CHECK(r.word_count == 13);
  CHECK(r.smelly_count == 2);
  CHECK(r.distinct_smell_types == 2);
  CHECK(r.alpha == doctest::Approx(0.3445).epsilon(1e-3));
  CHECK(std::abs(r.clarity - 0.61) <= 0.01);
  CHECK(r.testability == r.clarity);
  CHECK(r.findings.size() == 2);

  const auto clean = score_requirement("The system shall log every login attempt.", smells::SmellLexicon(),
                                       smells::PosSmellMap::default_map(), profiles().at("EIRENE"));
  CHECK(clean.clarity == 1.0);
  CHECK(clean.testability == 1.0);
  CHECK(clean.findings.empty());
}

TEST_CASE("policy only moves alpha-dependent values") {
  const auto lex = smells::SmellLexicon::load(resource_path("fixtures/sample_lexicon.csv"));
  const auto [text, terms] = sample(3);
  const auto& p = profiles().at("EIRENE");
  const auto soft = score_requirement(text, lex, smells::PosSmellMap::default_map(), p);
  const auto hard = score_requirement(text, lex, smells::PosSmellMap::default_map(),
                                      p.with_policy(AlphaPolicy::kHardened));
  CHECK(soft.clarity == hard.clarity);
  CHECK(soft.findings == hard.findings);
  CHECK(hard.alpha > soft.alpha);
  CHECK(hard.testability < soft.testability);
}
