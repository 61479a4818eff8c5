#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lrsel/linreg.hpp"

namespace lrsel {

/// One piecewise-linear piece of the lasso coefficient path. Coefficients
/// are affine in lambda on (lambda_lo, lambda_hi].
struct PathSegment {
    double lambda_hi = 0.0;
    double lambda_lo = 0.0;
    std::vector<int> active;   // ascending indices of the nonzero set
    Eigen::VectorXd beta_hi;   // length d, zeros off the active set
    Eigen::VectorXd beta_lo;
};

/// Full solution path of ||y - X b||^2 + lambda * sum |b_j|.
/// Segments are contiguous and ordered by decreasing lambda.
struct LassoPath {
    std::vector<PathSegment> segments;
    double lambda_max = 0.0;  // 2 * max_j |x_j' y|
    int d = 0;
    int n = 0;
};

/// A distinct active set encountered along the path, with its lambda
/// interval and the OLS refit used by the subset criteria.
struct CandidateModel {
    std::vector<int> subset;  // ascending
    double lambda_lo = 0.0;
    double lambda_hi = 0.0;
    int df = 0;
    OlsFit fit;
};

/// Exclusion counts produced while enumerating candidates.
struct CandidateDiagnostics {
    int excluded_df_overflow = 0;   // |S| > n - 1
    int excluded_rank_deficient = 0;
    int excluded_empty = 0;
};

/// LARS with the lasso modification (sign-crossing drops an index).
/// max_steps <= 0 selects the default 8 * min(d, n-1).
LassoPath compute_lars_path(const StandardizedDataset& data, int max_steps = 0);

/// Lasso coefficients at an arbitrary lambda > 0; zero vector for
/// lambda >= lambda_max, clamped to the last breakpoint below the path end.
Eigen::VectorXd coefficients_at(const LassoPath& path, double lambda);

/// Distinct active sets in decreasing-lambda order of first appearance,
/// each with its maximal lambda interval. Subsets with df > n-1 or a
/// rank-deficient design are excluded, as is the empty subset.
std::vector<CandidateModel> candidate_subsets(const LassoPath& path,
                                              const StandardizedDataset& data,
                                              CandidateDiagnostics* diag = nullptr);

}  // namespace lrsel
