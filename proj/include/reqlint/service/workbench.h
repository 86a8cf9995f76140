#pragma once

#include <array>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/evaluation/evaluator.h"
#include "reqlint/service/analysis_document.h"
#include "reqlint/service/dataset_csv.h"
#include "reqlint/service/store.h"

namespace reqlint::service {

struct Resources {
  smells::SmellLexicon lexicon;
  smells::PosSmellMap pos_map;
  testability::AlphaConfig config;

  // Default lexicon, modal set and alpha table.
  static Resources defaults();
};

struct ImportResult {
  std::vector<std::string> created;     // new requirement ids
  std::vector<std::string> duplicates;  // ids of rows already stored
  std::vector<RowError> errors;
};

struct RequirementScore {
  std::string id;
  double clarity = 1;
  double alpha = 0;
  double testability = 1;
  std::size_t sentence_count = 1;
  std::size_t smelly_count = 0;
  ReviewFlag review = ReviewFlag::kUnreviewed;
};

struct ProjectReport {
  Project project;
  testability::AlphaPolicy policy = testability::AlphaPolicy::kSoftened;
  std::vector<RequirementScore> scores;
  // Ten equal-width bins over [0, 1]; 1.0 falls in the last.
  std::array<std::size_t, 10> histogram{};
  // Auto against manual labels over reviewed requirements; absent when
  // none is reviewed, with the reason in `note`.
  std::optional<evaluation::EvaluationReport> evaluation;
  std::string note;
};

json project_report_json(const ProjectReport& r);

// Application facade over the store: projects, requirements, labels,
// reviews, import/export and reports. Mutations are serialized; analysis
// is stateless.
class Workbench {
 public:
  // Opens the store and rescores requirements stored under another
  // lexicon version.
  Workbench(std::filesystem::path data_dir, Resources resources);

  Store& store() { return store_; }
  const Resources& resources() const { return resources_; }
  std::string lexicon_version() const { return resources_.lexicon.version(); }

  // Throws Error(kInvalidArgs) for a blank name, alpha errors for a bad profile.
  Project create_project(std::string_view name, const testability::AlphaProfile& profile);
  std::vector<Project> projects() const { return store_.projects(); }
  // Throws Error(kUnknownProject).
  Project project(std::string_view id) const;
  std::optional<Project> find_project_by_name(std::string_view name) const;

  // Stores the text, or returns the stored one with the same content.
  // Throws Error(kUnknownProject) and Error(kEmptyText).
  StoredRequirement add_requirement(std::string_view project_id, std::string_view text, bool* created = nullptr);
  std::vector<StoredRequirement> requirements(std::string_view project_id) const;
  // Throws Error(kUnknownRequirement).
  StoredRequirement requirement(std::string_view id) const;

  // Replaces the labels; a change sends the flag back to unreviewed.
  // Throws Error(kUnknownRequirement) and Error(kInvalidTerm).
  StoredRequirement record_labels(std::string_view requirement_id, const evaluation::SmellTerms& labels,
                                  std::string_view actor);
  StoredRequirement set_review(std::string_view requirement_id, bool reviewed, std::string_view actor);

  // Rows become requirements of the project, labels included. With
  // `mark_reviewed` the imported labels count as reviewed ground truth.
  // Throws Error(kUnknownProject) and Error(kMissingColumn).
  ImportResult import_csv(std::string_view project_id, std::string_view content, bool mark_reviewed,
                          std::string_view actor);
  ImportResult import_records(std::string_view project_id, const std::vector<evaluation::GroundTruthRecord>& records,
                              bool mark_reviewed, std::string_view actor);
  std::string export_csv(std::string_view project_id) const;

  // Throws Error(kUnknownProject).
  ProjectReport project_report(std::string_view project_id, testability::AlphaPolicy policy,
                               const evaluation::EvaluationOptions& options = {}) const;

  // Stateless; throws Error(kEmptyText).
  Analysis analyze(std::string_view text, const testability::AlphaProfile& profile) const;

 private:
  StoredRequirement score(StoredRequirement r, const Project& p) const;

  Resources resources_;
  Store store_;
  std::mutex write_mutex_;
};

}  // namespace reqlint::service
