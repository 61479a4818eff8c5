#pragma once

#include <Eigen/Dense>
#include <map>
#include <set>
#include <vector>

#include "lrsel/criteria.hpp"
#include "lrsel/lasso_path.hpp"
#include "lrsel/linreg.hpp"

namespace lrsel {

enum class FitClass { Underfitted, Correct, Overfitted };

std::string fit_class_name(FitClass c);

/// Log-spaced lambda grid used by the continuous-in-lambda criteria.
struct LambdaGrid {
    double min_factor = 1e-4;  // grid spans [lambda_max * min_factor, lambda_max]
    int count = 1000;
};

struct ChosenModel {
    std::vector<int> subset;   // ascending 0-based indices
    double lambda_lo = 0.0;    // plateau over which this subset wins
    double lambda_hi = 0.0;
    double score = 0.0;
    OlsFit fit;                      // refit on the standardized scale
    Eigen::VectorXd raw_coefficients;  // per subset entry, raw scale
    double raw_intercept = 0.0;
};

struct ScoredCandidate {
    CandidateModel model;
    std::map<Criterion, CriterionScore> scores;  // LR / BIC only
};

struct SelectionReport {
    std::vector<ScoredCandidate> candidates;
    std::map<Criterion, ChosenModel> chosen;
    CandidateDiagnostics diagnostics;
    double lambda_max = 0.0;
    int n = 0;
    int d = 0;
    std::vector<std::string> names;
};

struct SelectorOptions {
    LambdaGrid grid;
    int max_steps = 0;  // 0 selects the path default
};

/// Full pipeline: standardize -> path -> candidates -> scores -> argmin per
/// criterion, with an unpenalized refit of each winner.
SelectionReport select(const Dataset& dataset, const std::set<Criterion>& criteria,
                       const SelectorOptions& options = {});

/// Same pipeline on data that is already standardized (names optional).
SelectionReport select_standardized(const StandardizedDataset& data,
                                    const std::set<Criterion>& criteria,
                                    const SelectorOptions& options = {});

FitClass classify_fit(const std::vector<int>& selected, const std::vector<int>& truth);

/// Scores a candidate refit under LR or BIC with the selector's guards
/// (rho clamped away from {0,1}; infeasible scores become +inf).
CriterionScore score_subset_criterion(Criterion criterion, int n, double y_sq_norm,
                                      const OlsFit& fit);

}  // namespace lrsel
