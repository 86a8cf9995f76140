#include <doctest.h>

#include <set>
#include <thread>

#include "reqlint/common/error.h"
#include "reqlint/common/strings.h"
#include "reqlint/service/workbench.h"
#include "support/temp_dir.h"

using namespace reqlint;
using namespace reqlint::service;
using reqlint::testing::TempDir;
using testability::AlphaPolicy;

namespace {

Resources sample_resources() {
  return {smells::SmellLexicon::load(resource_path("fixtures/sample_lexicon.csv")),
          smells::PosSmellMap::default_map(), testability::AlphaConfig::default_config()};
}

const std::map<std::string, testability::AlphaProfile>& profiles() {
  static const auto p =
      testability::parse_project_profiles(read_file(resource_path("fixtures/sample_projects.csv")));
  return p;
}

std::string sample_csv() { return read_file(resource_path("fixtures/sample_requirements.csv")); }

const std::string kR1 =
    "For calls between a controller and the lead cab, it shall be possible to add the controller to the "
    "multi-driver call.";

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kEmptyText;
}

}  // namespace

TEST_CASE("projects") {
  TempDir dir;
  Workbench wb(dir.path(), sample_resources());
  const auto p = wb.create_project("EIRENE", profiles().at("EIRENE"));
  CHECK(wb.project(p.id).name == "EIRENE");
  CHECK(wb.projects().size() == 1);
  CHECK(code_of([&] { wb.create_project("  ", profiles().at("EIRENE")); }) == ErrorCode::kInvalidArgs);
  CHECK(code_of([&] { wb.create_project("EIRENE", profiles().at("EIRENE")); }) == ErrorCode::kDuplicateKey);
  testability::AlphaProfile bad;
  bad.domains = {{"XX", std::nullopt}};
  CHECK(code_of([&] { wb.create_project("Bad", bad); }) == ErrorCode::kUnknownDomainCode);
  CHECK(code_of([&] { wb.project("p99"); }) == ErrorCode::kUnknownProject);
}

TEST_CASE("requirements are deduplicated by content") {
  TempDir dir;
  Workbench wb(dir.path(), sample_resources());
  const auto p = wb.create_project("EIRENE", profiles().at("EIRENE"));
  bool created = false;
  const auto a = wb.add_requirement(p.id, kR1, &created);
  CHECK(created);
  const auto b = wb.add_requirement(p.id, "  " + kR1 + "\n", &created);
  CHECK_FALSE(created);
  CHECK(a.id == b.id);
  CHECK(wb.requirements(p.id).size() == 1);
  CHECK(code_of([&] { wb.add_requirement(p.id, " "); }) == ErrorCode::kEmptyText);
  CHECK(code_of([&] { wb.add_requirement("p42", kR1); }) == ErrorCode::kUnknownProject);
}

TEST_CASE("labels and review") {
  TempDir dir;
  Workbench wb(dir.path(), sample_resources());
  const auto p = wb.create_project("EIRENE", profiles().at("EIRENE"));
  const auto r = wb.add_requirement(p.id, kR1);
  evaluation::SmellTerms labels;
  labels[8] = {"call"};
  auto stored = wb.record_labels(r.id, labels, "alice");
  CHECK(stored.labels[8] == std::vector<std::string>{"call"});
  CHECK(stored.review == ReviewFlag::kUnreviewed);
  stored = wb.set_review(r.id, true, "bob");
  CHECK(stored.review == ReviewFlag::kReviewed);
  CHECK(wb.requirement(r.id).review == ReviewFlag::kReviewed);
  // Saving the same labels keeps the review; changing them clears it.
  CHECK(wb.record_labels(r.id, labels, "alice").review == ReviewFlag::kReviewed);
  labels[8].push_back("calls");
  CHECK(wb.record_labels(r.id, labels, "alice").review == ReviewFlag::kUnreviewed);

  evaluation::SmellTerms bad;
  bad[8] = {"zeppelin"};
  CHECK(code_of([&] { wb.record_labels(r.id, bad, "alice"); }) == ErrorCode::kInvalidTerm);
  CHECK(wb.requirement(r.id).labels == labels);
  CHECK(code_of([&] { wb.record_labels("r999", labels, "alice"); }) == ErrorCode::kUnknownRequirement);
  CHECK(code_of([&] { wb.set_review("r999", true, "bob"); }) == ErrorCode::kUnknownRequirement);

  const auto audit = wb.store().audit();
  REQUIRE(audit.size() == 4);
  CHECK(audit[0].actor == "alice");
  CHECK(audit[0].action == "labels");
  CHECK(audit[1].action == "review");
  CHECK(audit[1].actor == "bob");
}

TEST_CASE("import is idempotent and export is a fixed point") {
  TempDir dir;
  Workbench wb(dir.path(), sample_resources());
  const auto p = wb.create_project("Sample", profiles().at("EIRENE"));
  const auto first = wb.import_csv(p.id, sample_csv(), true, "importer");
  CHECK(first.created.size() == 8);
  CHECK(first.errors.empty());
  const auto again = wb.import_csv(p.id, sample_csv(), true, "importer");
  CHECK(again.created.empty());
  CHECK(again.duplicates.size() == 8);
  CHECK(wb.requirements(p.id).size() == 8);

  const auto exported = wb.export_csv(p.id);
  const auto q = wb.create_project("Copy", profiles().at("EIRENE"));
  wb.import_csv(q.id, exported, false, "importer");
  const auto original = parse_dataset_csv(sample_csv()).records;
  const auto copy = parse_dataset_csv(wb.export_csv(q.id)).records;
  REQUIRE(copy.size() == original.size());
  for (std::size_t i = 0; i < copy.size(); ++i) {
    CHECK(copy[i].text == original[i].text);
    CHECK(copy[i].terms == original[i].terms);
  }
  // Same texts and labels, only the project column differs.
  CHECK(parse_dataset_csv(wb.export_csv(q.id)).records.size() == 8);
  const auto empty = wb.create_project("Empty", profiles().at("KeePass"));
  CHECK(split(wb.export_csv(empty.id), '\n').size() == 2);  // header and the trailing empty piece
  CHECK(code_of([&] { wb.export_csv("p77"); }) == ErrorCode::kUnknownProject);
  CHECK(code_of([&] { wb.import_csv(p.id, "text,project\n", false, "x"); }) == ErrorCode::kMissingColumn);
}

TEST_CASE("project report") {
  TempDir dir;
  Workbench wb(dir.path(), sample_resources());
  const auto p = wb.create_project("Sample", profiles().at("EIRENE"));
  wb.import_csv(p.id, sample_csv(), false, "importer");

  const auto unreviewed = wb.project_report(p.id, AlphaPolicy::kSoftened);
  CHECK(unreviewed.scores.size() == 8);
  CHECK_FALSE(unreviewed.evaluation);
  CHECK(unreviewed.note.find("NoReviewedData") != std::string::npos);
  std::size_t binned = 0;
  for (auto n : unreviewed.histogram) binned += n;
  CHECK(binned == 8);

  for (const auto& r : wb.requirements(p.id)) wb.set_review(r.id, true, "bob");
  evaluation::EvaluationOptions opt;
  opt.permutations = 200;
  const auto soft = wb.project_report(p.id, AlphaPolicy::kSoftened, opt);
  const auto hard = wb.project_report(p.id, AlphaPolicy::kHardened, opt);
  REQUIRE(soft.evaluation);
  const auto& overall = soft.evaluation->errors.back();
  CHECK(overall.project == "overall");
  CHECK(overall.requirements == 8);
  CHECK(overall.softened.mae >= 0);
  MESSAGE("sample project MAE softened " << overall.softened.mae << " hardened " << overall.hardened.mae);

  // The policy only moves alpha dependent numbers.
  for (std::size_t i = 0; i < soft.scores.size(); ++i) {
    CHECK(soft.scores[i].clarity == hard.scores[i].clarity);
    CHECK(soft.scores[i].smelly_count == hard.scores[i].smelly_count);
    CHECK(soft.scores[i].alpha <= hard.scores[i].alpha);
    CHECK(soft.scores[i].testability >= hard.scores[i].testability);
  }
  const auto j = project_report_json(soft);
  CHECK(j["histogram"]["bins"].size() == 10);
  CHECK(j["evaluation"]["errors"].back()["project"] == "overall");

  const auto empty = wb.create_project("Empty", profiles().at("KeePass"));
  CHECK(wb.project_report(empty.id, AlphaPolicy::kSoftened).scores.empty());
  CHECK(code_of([&] { wb.project_report("p404", AlphaPolicy::kSoftened); }) == ErrorCode::kUnknownProject);
}

TEST_CASE("analysis of a requirement") {
  TempDir dir;
  Workbench wb(dir.path(), sample_resources());
  const auto a = wb.analyze("The system will employ on demand asynchronous loading for faster execution of pages",
                            profiles().at("Gamma-J"));
  CHECK(std::abs(a.softened.testability - 0.61) <= 0.01);
  CHECK(a.softened.clarity == a.hardened.clarity);
  CHECK(a.softened.findings.size() == 2);
  const auto j = analysis_json(a);
  CHECK(j["findings"].size() == 2);
  CHECK(j["testability"]["hardened"].get<double>() == doctest::Approx(a.hardened.testability));
  CHECK(analysis_table(a).find("testability") != std::string::npos);
  CHECK(code_of([&] { wb.analyze("   ", profiles().at("Gamma-J")); }) == ErrorCode::kEmptyText);
}

TEST_CASE("stored scores follow the lexicon version") {
  TempDir dir;
  std::string id;
  std::string old_version;
  {
    Workbench wb(dir.path(), sample_resources());
    const auto p = wb.create_project("EIRENE", profiles().at("EIRENE"));
    const auto r = wb.add_requirement(p.id, "A message can include several segments.");
    id = r.id;
    old_version = r.lexicon_version;
    CHECK(r.scores.smelly_count == 3);  // can, several, segments
    // Stored scores equal a recomputation from the text.
    const auto fresh = wb.analyze(r.text, p.profile);
    CHECK(r.scores.clarity == fresh.softened.clarity);
    CHECK(r.scores.testability_hardened == fresh.hardened.testability);
  }
  // Reopen with a lexicon that lacks "segment" and "several".
  Resources plain = Resources::defaults();
  Workbench wb(dir.path(), plain);
  const auto r = wb.requirement(id);
  CHECK(r.lexicon_version == plain.lexicon.version());
  CHECK(r.lexicon_version != old_version);
  const auto fresh = wb.analyze(r.text, wb.project(r.project_id).profile);
  CHECK(r.scores.smelly_count == fresh.softened.smelly_count);
  CHECK(r.scores.clarity == fresh.softened.clarity);
  CHECK(r.findings == fresh.softened.findings);
  CHECK(wb.store().audit().back().action == "rescore");
}

TEST_CASE("concurrent writers get distinct ids") {
  TempDir dir;
  Workbench wb(dir.path(), sample_resources());
  const auto p = wb.create_project("EIRENE", profiles().at("EIRENE"));
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 5; ++i) wb.add_requirement(p.id, "Requirement " + std::to_string(t * 10 + i) + " shall hold.");
    });
  }
  for (auto& t : threads) t.join();
  std::set<std::string> ids;
  for (const auto& r : wb.requirements(p.id)) ids.insert(r.id);
  CHECK(ids.size() == 20);
  Workbench reopened(dir.path(), sample_resources());
  CHECK(reopened.requirements(p.id).size() == 20);
}
