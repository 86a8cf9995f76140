#pragma once

#include <string>

#include <json.hpp>

#include "reqlint/evaluation/evaluator.h"

namespace reqlint::evaluation {

// smell,tp,fp,fn,precision,recall,f1 with an Average row.
std::string smell_table_csv(const EvaluationReport& report);
// project,policy,mae,mse,rmse,mslne,mdae.
std::string error_table_csv(const EvaluationReport& report);
// n,rho,p_value,permutations (header only when undefined).
std::string spearman_csv(const EvaluationReport& report);
// node,depth,feature,cutoff,mse,fraction,value,left,right.
std::string tree_nodes_csv(const TreeSummary& tree);
// feature,importance.
std::string tree_importance_csv(const TreeSummary& tree);
// index,project,truth_clarity,predicted_clarity,truth_softened,...
std::string requirement_scores_csv(const EvaluationReport& report);

nlohmann::json report_json(const EvaluationReport& report);

}  // namespace reqlint::evaluation
