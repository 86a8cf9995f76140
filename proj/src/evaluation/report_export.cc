#include "reqlint/evaluation/report_export.h"

#include "reqlint/common/csv.h"
#include "reqlint/common/strings.h"

namespace reqlint::evaluation {

using nlohmann::json;

namespace {

std::string fx(double v) { return format_fixed(v, 4); }

std::vector<std::string> metric_cells(const ErrorMetrics& m) {
  return {fx(m.mae), fx(m.mse), fx(m.rmse), fx(m.mslne), fx(m.mdae)};
}

json metrics_json(const ErrorMetrics& m) {
  return {{"mae", m.mae}, {"mse", m.mse}, {"rmse", m.rmse}, {"mslne", m.mslne}, {"mdae", m.mdae}};
}

json prf_json(const PrfScores& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}, {"degenerate", s.degenerate}};
}

json counts_json(const ConfusionCounts& c) { return {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}}; }

json tree_json(const TreeSummary& t) {
  json nodes = json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    json j = {{"id", i},       {"depth", n.depth},       {"mse", n.mse},
              {"value", n.value}, {"fraction", n.fraction}, {"samples", n.samples.size()}};
    if (n.feature >= 0) {
      j["feature"] = t.feature_names[static_cast<std::size_t>(n.feature)];
      j["cutoff"] = n.cutoff;
      j["left"] = n.left;
      j["right"] = n.right;
    }
    nodes.push_back(std::move(j));
  }
  json imp = json::object();
  for (std::size_t f = 0; f < t.importances.size(); ++f) imp[t.feature_names[f]] = t.importances[f];
  return {{"nodes", std::move(nodes)}, {"importances", std::move(imp)}};
}

}  // namespace

std::string smell_table_csv(const EvaluationReport& report) {
  std::string out = csv::format_row({"smell", "tp", "fp", "fn", "precision", "recall", "f1"});
  for (const auto& row : report.smells) {
    out += csv::format_row({std::string(smells::smell_name(row.smell)), std::to_string(row.counts.tp),
                            std::to_string(row.counts.fp), std::to_string(row.counts.fn), fx(row.scores.precision),
                            fx(row.scores.recall), fx(row.scores.f1)});
  }
  out += csv::format_row({"Average", "", "", "", fx(report.average.precision), fx(report.average.recall),
                          fx(report.average.f1)});
  return out;
}

std::string error_table_csv(const EvaluationReport& report) {
  std::string out = csv::format_row({"project", "policy", "requirements", "mae", "mse", "rmse", "mslne", "mdae"});
  for (const auto& row : report.errors) {
    for (const auto& [policy, m] : {std::pair{"softened", &row.softened}, std::pair{"hardened", &row.hardened}}) {
      std::vector<std::string> cells = {row.project, policy, std::to_string(row.requirements)};
      for (auto& c : metric_cells(*m)) cells.push_back(std::move(c));
      out += csv::format_row(cells);
    }
  }
  return out;
}

std::string spearman_csv(const EvaluationReport& report) {
  std::string out = csv::format_row({"n", "rho", "p_value", "permutations"});
  if (const auto& s = report.spearman) {
    out += csv::format_row({std::to_string(s->n), fx(s->rho), s->p_value ? fx(*s->p_value) : "",
                            std::to_string(s->permutations)});
  }
  return out;
}

std::string tree_nodes_csv(const TreeSummary& tree) {
  std::string out =
      csv::format_row({"node", "depth", "feature", "cutoff", "mse", "fraction", "value", "left", "right"});
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    const bool split = n.feature >= 0;
    out += csv::format_row({std::to_string(i), std::to_string(n.depth),
                            split ? tree.feature_names[static_cast<std::size_t>(n.feature)] : "",
                            split ? fx(n.cutoff) : "", fx(n.mse), fx(n.fraction), fx(n.value),
                            split ? std::to_string(n.left) : "", split ? std::to_string(n.right) : ""});
  }
  return out;
}

std::string tree_importance_csv(const TreeSummary& tree) {
  std::string out = csv::format_row({"feature", "importance"});
  for (std::size_t f = 0; f < tree.importances.size(); ++f) {
    out += csv::format_row({tree.feature_names[f], fx(tree.importances[f])});
  }
  return out;
}

std::string requirement_scores_csv(const EvaluationReport& report) {
  std::string out = csv::format_row({"index", "project", "sentences", "truth_clarity", "predicted_clarity",
                                     "truth_softened", "predicted_softened", "truth_hardened", "predicted_hardened"});
  for (const auto& r : report.requirements) {
    out += csv::format_row({std::to_string(r.index), r.project, std::to_string(r.sentence_count), fx(r.truth_clarity),
                            fx(r.predicted_clarity), fx(r.softened.truth), fx(r.softened.predicted),
                            fx(r.hardened.truth), fx(r.hardened.predicted)});
  }
  return out;
}

json report_json(const EvaluationReport& report) {
  json smells_j = json::array();
  for (const auto& row : report.smells) {
    json j = prf_json(row.scores);
    j["smell"] = smells::smell_code(row.smell);
    j["name"] = smells::smell_name(row.smell);
    j["counts"] = counts_json(row.counts);
    smells_j.push_back(std::move(j));
  }
  json errors = json::array();
  for (const auto& row : report.errors) {
    errors.push_back({{"project", row.project},
                      {"requirements", row.requirements},
                      {"softened", metrics_json(row.softened)},
                      {"hardened", metrics_json(row.hardened)}});
  }
  json reqs = json::array();
  for (const auto& r : report.requirements) {
    reqs.push_back({{"index", r.index},
                    {"project", r.project},
                    {"sentence_count", r.sentence_count},
                    {"truth_clarity", r.truth_clarity},
                    {"predicted_clarity", r.predicted_clarity},
                    {"softened", {{"truth", r.softened.truth}, {"predicted", r.softened.predicted}}},
                    {"hardened", {{"truth", r.hardened.truth}, {"predicted", r.hardened.predicted}}},
                    {"findings", r.findings.size()}});
  }
  json out = {{"smells", std::move(smells_j)},
              {"average", prf_json(report.average)},
              {"pooled", prf_json(report.pooled_scores)},
              {"pooled_counts", counts_json(report.pooled)},
              {"errors", std::move(errors)},
              {"requirements", std::move(reqs)}};
  if (report.spearman) {
    out["spearman"] = {{"rho", report.spearman->rho},
                       {"n", report.spearman->n},
                       {"permutations", report.spearman->permutations}};
    if (report.spearman->p_value) out["spearman"]["p_value"] = *report.spearman->p_value;
  } else {
    out["spearman"] = {{"undefined", report.spearman_note}};
  }
  if (report.tree) out["tree"] = tree_json(*report.tree);
  return out;
}

}  // namespace reqlint::evaluation
