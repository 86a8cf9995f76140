#include "reqlint/evaluation/evaluator.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "reqlint/common/error.h"
#include "reqlint/text/pipeline.h"

namespace reqlint::evaluation {

using smells::kAllSmells;
using testability::AlphaPolicy;

void fill_smell_rows(EvaluationReport& report, const SmellConfusion& totals) {
  report.pooled = {};
  report.average = {};
  for (std::size_t i = 0; i < kAllSmells.size(); ++i) {
    auto& row = report.smells[i];
    row.smell = kAllSmells[i];
    row.counts = totals[i];
    row.scores = precision_recall_f1(totals[i]);
    report.pooled += totals[i];
    report.average.precision += row.scores.precision / 9;
    report.average.recall += row.scores.recall / 9;
    report.average.f1 += row.scores.f1 / 9;
    report.average.degenerate = report.average.degenerate || row.scores.degenerate;
  }
  report.pooled_scores = precision_recall_f1(report.pooled);
}

namespace {

RequirementEvaluation evaluate_record(std::size_t index, const GroundTruthRecord& record,
                                      const smells::SmellLexicon& lexicon, const smells::PosSmellMap& pos_map,
                                      const testability::AlphaProfile& profile,
                                      const testability::AlphaConfig& config) {
  const auto analysis = text::Analyzer::default_instance().analyze(record.text);
  const double soft = testability::compute_alpha(profile.with_policy(AlphaPolicy::kSoftened), config);
  const double hard = testability::compute_alpha(profile.with_policy(AlphaPolicy::kHardened), config);
  const auto annotated = record.annotated();

  RequirementEvaluation r;
  r.index = index;
  r.project = record.project;
  r.findings = smells::detect_smells(analysis, lexicon, pos_map);
  r.confusion = match_findings(r.findings, record);
  r.sentence_count = analysis.sentence_count();

  const auto truth_soft = testability::score_annotated(analysis, annotated, soft);
  const auto pred_soft = testability::score_findings(analysis, r.findings, soft);
  r.truth_clarity = truth_soft.clarity;
  r.predicted_clarity = pred_soft.clarity;
  r.softened = {truth_soft.testability, pred_soft.testability};
  r.hardened = {testability::testability(r.truth_clarity, hard, r.sentence_count),
                testability::testability(r.predicted_clarity, hard, r.sentence_count)};
  return r;
}

ErrorRow error_row(const std::string& name, const std::vector<const RequirementEvaluation*>& rows) {
  std::vector<double> ts, ps, th, ph;
  for (const auto* r : rows) {
    ts.push_back(r->softened.truth);
    ps.push_back(r->softened.predicted);
    th.push_back(r->hardened.truth);
    ph.push_back(r->hardened.predicted);
  }
  return {name, rows.size(), error_metrics(ts, ps), error_metrics(th, ph)};
}

}  // namespace

EvaluationReport evaluate_project(const std::vector<GroundTruthRecord>& dataset, const smells::SmellLexicon& lexicon,
                                  const smells::PosSmellMap& pos_map,
                                  const std::map<std::string, testability::AlphaProfile>& profiles,
                                  const testability::AlphaConfig& config, const EvaluationOptions& options) {
  if (dataset.empty()) raise(ErrorCode::kEmptyDataset, "dataset has no requirements");
  for (const auto& rec : dataset) {
    if (!profiles.contains(rec.project)) raise(ErrorCode::kMissingProfile, "no alpha profile for project '" + rec.project + "'");
  }

  EvaluationReport report;
  report.requirements.resize(dataset.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, dataset.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < dataset.size(); i = next++) {
      try {
        report.requirements[i] =
            evaluate_record(i, dataset[i], lexicon, pos_map, profiles.at(dataset[i].project), config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SmellConfusion totals;
  std::map<std::string, std::vector<const RequirementEvaluation*>> by_project;
  std::vector<const RequirementEvaluation*> all;
  for (const auto& r : report.requirements) {
    for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += r.confusion[i];
    by_project[r.project].push_back(&r);
    all.push_back(&r);
  }
  fill_smell_rows(report, totals);
  for (const auto& [name, rows] : by_project) report.errors.push_back(error_row(name, rows));
  report.errors.push_back(error_row("overall", all));

  std::vector<double> truth, predicted;
  for (const auto* r : all) {
    truth.push_back(r->softened.truth);
    predicted.push_back(r->softened.predicted);
  }
  try {
    report.spearman = spearman(truth, predicted, options.permutations, options.seed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTooFewSamples && e.code() != ErrorCode::kConstantInput) throw;
    report.spearman_note = e.what();
  }

  if (dataset.size() >= 10) {
    std::vector<std::vector<double>> features;
    for (const auto& rec : dataset) {
      const auto c = smell_counts(rec.terms);
      features.emplace_back(c.begin(), c.end());
    }
    TreeOptions topt;
    topt.max_depth = options.tree_depth;
    for (auto s : kAllSmells) topt.feature_names.emplace_back(smells::smell_column(s));
    std::vector<double> lower;
    for (const auto* r : all) lower.push_back(r->hardened.truth);
    report.tree = tree_importance(features, lower, topt);
  }
  return report;
}

}  // namespace reqlint::evaluation
