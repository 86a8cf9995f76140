#include "reqlint/service/workbench.h"

#include <algorithm>

#include "reqlint/common/error.h"
#include "reqlint/common/log.h"
#include "reqlint/common/strings.h"
#include "reqlint/evaluation/report_export.h"

namespace reqlint::service {

using testability::AlphaPolicy;

Resources Resources::defaults() {
  return {smells::SmellLexicon::default_lexicon(), smells::PosSmellMap::default_map(),
          testability::AlphaConfig::default_config()};
}

json project_report_json(const ProjectReport& r) {
  json scores = json::array();
  for (const auto& s : r.scores) {
    scores.push_back({{"id", s.id},
                      {"clarity", s.clarity},
                      {"alpha", s.alpha},
                      {"testability", s.testability},
                      {"sentence_count", s.sentence_count},
                      {"smelly_count", s.smelly_count},
                      {"review", review_flag_name(s.review)}});
  }
  json out = {{"project", project_json(r.project)},
              {"policy", testability::policy_name(r.policy)},
              {"requirements", std::move(scores)},
              {"histogram", {{"bins", r.histogram}, {"width", 0.1}}}};
  out["evaluation"] = r.evaluation ? evaluation::report_json(*r.evaluation) : json(nullptr);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Workbench::Workbench(std::filesystem::path data_dir, Resources resources)
    : resources_(std::move(resources)), store_(std::move(data_dir)) {
  const auto version = lexicon_version();
  std::vector<StoredRequirement> stale;
  for (const auto& r : store_.requirements()) {
    if (r.lexicon_version == version) continue;
    const auto p = store_.project(r.project_id);
    if (!p) {
      log::warning("requirement " + r.id + " belongs to missing project " + r.project_id);
      continue;
    }
    stale.push_back(score(r, *p));
  }
  if (!stale.empty()) {
    log::info("rescoring " + std::to_string(stale.size()) + " requirement(s) for lexicon " + version);
    store_.put_requirements(stale);
    store_.append_audit({utc_timestamp(), "system", "rescore", "", "lexicon " + version + ", " +
                                                                       std::to_string(stale.size()) + " requirement(s)"});
  }
}

StoredRequirement Workbench::score(StoredRequirement r, const Project& p) const {
  const auto analysis = text::Analyzer::default_instance().analyze(r.text);
  const double soft = testability::compute_alpha(p.profile.with_policy(AlphaPolicy::kSoftened), resources_.config);
  const double hard = testability::compute_alpha(p.profile.with_policy(AlphaPolicy::kHardened), resources_.config);
  auto result = testability::score_findings(
      analysis, smells::detect_smells(analysis, resources_.lexicon, resources_.pos_map), soft);
  r.scores.clarity = result.clarity;
  r.scores.sentence_count = result.sentence_count;
  r.scores.word_count = result.word_count;
  r.scores.smelly_count = result.smelly_count;
  r.scores.distinct_smell_types = result.distinct_smell_types;
  r.scores.alpha_softened = soft;
  r.scores.alpha_hardened = hard;
  r.scores.testability_softened = result.testability;
  r.scores.testability_hardened = testability::testability(result.clarity, hard, result.sentence_count);
  r.findings = std::move(result.findings);
  r.lexicon_version = lexicon_version();
  return r;
}

Project Workbench::create_project(std::string_view name, const testability::AlphaProfile& profile) {
  const auto trimmed = std::string(trim(name));
  if (trimmed.empty()) raise(ErrorCode::kInvalidArgs, "project name is blank");
  // Rejects unknown domains and out-of-range values before anything is stored.
  testability::compute_alpha(profile.with_policy(AlphaPolicy::kSoftened), resources_.config);
  testability::compute_alpha(profile.with_policy(AlphaPolicy::kHardened), resources_.config);
  std::lock_guard lock(write_mutex_);
  if (find_project_by_name(trimmed)) raise(ErrorCode::kDuplicateKey, "project '" + trimmed + "' exists");
  Project p{store_.next_project_id(), trimmed, profile, utc_timestamp()};
  store_.put_project(p);
  return p;
}

Project Workbench::project(std::string_view id) const {
  auto p = store_.project(id);
  if (!p) raise(ErrorCode::kUnknownProject, "unknown project '" + std::string(id) + "'");
  return *p;
}

std::optional<Project> Workbench::find_project_by_name(std::string_view name) const {
  for (auto& p : store_.projects()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

StoredRequirement Workbench::add_requirement(std::string_view project_id, std::string_view text, bool* created) {
  const auto p = project(project_id);
  const auto body = std::string(trim(text));
  if (body.empty()) raise(ErrorCode::kEmptyText, "requirement text is blank");
  std::lock_guard lock(write_mutex_);
  const auto hash = content_hash(body);
  for (auto& r : store_.requirements_of(p.id)) {
    if (r.content_hash == hash) {
      if (created) *created = false;
      return r;
    }
  }
  StoredRequirement r;
  r.id = store_.next_requirement_id();
  r.project_id = p.id;
  r.text = body;
  r.content_hash = hash;
  r.created_at = utc_timestamp();
  r = score(std::move(r), p);
  store_.put_requirements({r});
  if (created) *created = true;
  return r;
}

std::vector<StoredRequirement> Workbench::requirements(std::string_view project_id) const {
  return store_.requirements_of(project(project_id).id);
}

StoredRequirement Workbench::requirement(std::string_view id) const {
  auto r = store_.requirement(id);
  if (!r) raise(ErrorCode::kUnknownRequirement, "unknown requirement '" + std::string(id) + "'");
  return *r;
}

StoredRequirement Workbench::record_labels(std::string_view requirement_id, const evaluation::SmellTerms& labels,
                                           std::string_view actor) {
  std::lock_guard lock(write_mutex_);
  auto r = requirement(requirement_id);
  evaluation::GroundTruthRecord check{r.text, "", labels};
  evaluation::validate_record(check);
  if (r.labels != labels) {
    r.labels = labels;
    r.review = ReviewFlag::kUnreviewed;
  }
  store_.put_requirements({r});
  store_.append_audit({utc_timestamp(), std::string(actor), "labels", r.id, labels_json(labels).dump()});
  return r;
}

StoredRequirement Workbench::set_review(std::string_view requirement_id, bool reviewed, std::string_view actor) {
  std::lock_guard lock(write_mutex_);
  auto r = requirement(requirement_id);
  r.review = reviewed ? ReviewFlag::kReviewed : ReviewFlag::kUnreviewed;
  store_.put_requirements({r});
  store_.append_audit({utc_timestamp(), std::string(actor), reviewed ? "review" : "unreview", r.id, ""});
  return r;
}

ImportResult Workbench::import_records(std::string_view project_id,
                                       const std::vector<evaluation::GroundTruthRecord>& records, bool mark_reviewed,
                                       std::string_view actor) {
  const auto p = project(project_id);
  std::lock_guard lock(write_mutex_);
  ImportResult result;
  std::map<std::string, std::string> known;  // content hash -> id
  for (const auto& r : store_.requirements_of(p.id)) known.emplace(r.content_hash, r.id);
  std::vector<StoredRequirement> fresh;
  for (const auto& rec : records) {
    const auto body = std::string(trim(rec.text));
    const auto hash = content_hash(body);
    if (auto it = known.find(hash); it != known.end()) {
      result.duplicates.push_back(it->second);
      continue;
    }
    StoredRequirement r;
    r.id = store_.next_requirement_id();
    r.project_id = p.id;
    r.text = body;
    r.content_hash = hash;
    r.labels = rec.terms;
    r.review = mark_reviewed ? ReviewFlag::kReviewed : ReviewFlag::kUnreviewed;
    r.created_at = utc_timestamp();
    fresh.push_back(score(std::move(r), p));
    known.emplace(hash, fresh.back().id);
    result.created.push_back(fresh.back().id);
  }
  store_.put_requirements(fresh);
  store_.append_audit({utc_timestamp(), std::string(actor), "import", p.id,
                       std::to_string(result.created.size()) + " created, " +
                           std::to_string(result.duplicates.size()) + " duplicate(s)" +
                           (mark_reviewed ? ", reviewed" : "")});
  return result;
}

ImportResult Workbench::import_csv(std::string_view project_id, std::string_view content, bool mark_reviewed,
                                   std::string_view actor) {
  project(project_id);
  auto parsed = parse_dataset_csv(content);
  auto result = import_records(project_id, parsed.records, mark_reviewed, actor);
  result.errors = std::move(parsed.errors);
  return result;
}

std::string Workbench::export_csv(std::string_view project_id) const {
  const auto p = project(project_id);
  std::vector<evaluation::GroundTruthRecord> records;
  for (const auto& r : store_.requirements_of(p.id)) records.push_back({r.text, p.name, r.labels});
  return format_dataset_csv(records);
}

ProjectReport Workbench::project_report(std::string_view project_id, AlphaPolicy policy,
                                        const evaluation::EvaluationOptions& options) const {
  ProjectReport report;
  report.project = project(project_id);
  report.policy = policy;
  const auto reqs = store_.requirements_of(report.project.id);
  std::vector<evaluation::GroundTruthRecord> reviewed;
  for (const auto& r : reqs) {
    const bool soft = policy == AlphaPolicy::kSoftened;
    RequirementScore s{r.id,
                       r.scores.clarity,
                       soft ? r.scores.alpha_softened : r.scores.alpha_hardened,
                       soft ? r.scores.testability_softened : r.scores.testability_hardened,
                       r.scores.sentence_count,
                       r.scores.smelly_count,
                       r.review};
    const auto bin = std::min<std::size_t>(9, static_cast<std::size_t>(std::max(0.0, s.testability) * 10));
    ++report.histogram[bin];
    report.scores.push_back(std::move(s));
    if (r.review == ReviewFlag::kReviewed) reviewed.push_back({r.text, report.project.name, r.labels});
  }
  if (reqs.empty()) {
    report.note = "project has no requirements";
  } else if (reviewed.empty()) {
    report.note = std::string(error_code_name(ErrorCode::kNoReviewedData)) + ": no reviewed requirements";
  } else {
    report.evaluation = evaluation::evaluate_project(reviewed, resources_.lexicon, resources_.pos_map,
                                                     {{report.project.name, report.project.profile}},
                                                     resources_.config, options);
  }
  return report;
}

Analysis Workbench::analyze(std::string_view text, const testability::AlphaProfile& profile) const {
  const auto analysis = text::Analyzer::default_instance().analyze(text);
  const double soft = testability::compute_alpha(profile.with_policy(AlphaPolicy::kSoftened), resources_.config);
  const double hard = testability::compute_alpha(profile.with_policy(AlphaPolicy::kHardened), resources_.config);
  const auto findings = smells::detect_smells(analysis, resources_.lexicon, resources_.pos_map);
  return {std::string(text), testability::score_findings(analysis, findings, soft),
          testability::score_findings(analysis, findings, hard)};
}

}  // namespace reqlint::service
