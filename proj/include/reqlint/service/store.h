#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/evaluation/ground_truth.h"
#include "reqlint/testability/alpha.h"
#include "reqlint/testability/scorer.h"

namespace reqlint::service {

struct Project {
  std::string id;
  std::string name;
  testability::AlphaProfile profile;
  std::string created_at;  // ISO 8601 UTC
};

enum class ReviewFlag { kUnreviewed, kReviewed };
std::string_view review_flag_name(ReviewFlag f);  // "unreviewed", "reviewed"

// Detection scores, alpha dependent parts under both policies.
struct StoredScores {
  double clarity = 1;
  std::size_t sentence_count = 1;
  std::size_t word_count = 0;
  std::size_t smelly_count = 0;
  std::size_t distinct_smell_types = 0;
  double alpha_softened = 0;
  double alpha_hardened = 0;
  double testability_softened = 1;
  double testability_hardened = 1;

  friend bool operator==(const StoredScores&, const StoredScores&) = default;
};

struct StoredRequirement {
  std::string id;
  std::string project_id;
  std::string text;
  std::string content_hash;
  evaluation::SmellTerms labels;
  ReviewFlag review = ReviewFlag::kUnreviewed;
  std::vector<smells::SmellFinding> findings;
  StoredScores scores;
  std::string lexicon_version;
  std::string created_at;
};

struct AuditEntry {
  std::string timestamp;
  std::string actor;
  std::string action;  // "labels", "review", "unreview", "import", ...
  std::string target;  // requirement or project id
  std::string detail;
};

std::string content_hash(std::string_view text);
std::string utc_timestamp();

// Directory of line-delimited JSON files: projects.jsonl,
// requirements.jsonl and an append-only audit.jsonl. Every change rewrites
// the entity file to a temporary and renames it over the old one, so a
// crash leaves either the old or the new file. Readers get copies; writes
// are serialized.
class Store {
 public:
  // Creates the directory when missing and loads what is there.
  // Throws Error(kIoError) or Error(kFormatError) for unreadable files.
  explicit Store(std::filesystem::path dir);

  // $REQLINT_DATA_DIR, else "reqlint-data" under the working directory.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  std::vector<Project> projects() const;
  std::optional<Project> project(std::string_view id) const;
  std::vector<StoredRequirement> requirements() const;
  std::vector<StoredRequirement> requirements_of(std::string_view project_id) const;
  std::optional<StoredRequirement> requirement(std::string_view id) const;
  std::vector<AuditEntry> audit() const;

  // Insert or replace by id, one file write per call.
  void put_project(const Project& p);
  void put_requirements(const std::vector<StoredRequirement>& rs);
  void append_audit(const AuditEntry& e);

  // Fresh ids: "p<n>" and "r<n>".
  std::string next_project_id();
  std::string next_requirement_id();

  // Test hook called with "temp_written" before each rename and "renamed"
  // after it. Throwing from it simulates a crash at that point.
  void set_crash_hook(std::function<void(std::string_view stage)> hook);

 private:
  void write_atomic(const std::filesystem::path& path, const std::string& content);
  void save_projects(const std::vector<Project>& ps);
  void save_requirements(const std::vector<StoredRequirement>& rs);

  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
  std::vector<Project> projects_;
  std::vector<StoredRequirement> requirements_;
  std::vector<AuditEntry> audit_;
  std::uint64_t next_project_ = 1;
  std::uint64_t next_requirement_ = 1;
  std::function<void(std::string_view)> crash_hook_;
};

}  // namespace reqlint::service
