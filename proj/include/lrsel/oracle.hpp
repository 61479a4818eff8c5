#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "lrsel/criteria.hpp"
#include "lrsel/linreg.hpp"

namespace lrsel {

/// Brute-force reference implementations. Correctness references only;
/// they live in the shipped library so derived values are regenerable.
struct OracleConfig {
    int max_subset_dim = 12;     // hard limit 20 (2^d enumeration guard)
    double cd_tol = 1e-10;
    long cd_max_iters = 1000000;
    double alpha_log_min = -8.0;  // log10
    double alpha_log_max = 8.0;
    long alpha_grid_count = 1000000;
};

/// Minimizer of the criterion over all 2^d - 1 nonempty subsets, with the
/// selector's tie-break. Supports LR and BIC. visited, when given, receives
/// the number of subsets enumerated.
std::vector<int> best_subset_exhaustive(const StandardizedDataset& data, Criterion criterion,
                                        const OracleConfig& cfg = {},
                                        std::uint64_t* visited = nullptr);

/// Cyclic coordinate descent on ||y - X b||^2 + lambda sum|b_j|.
Eigen::VectorXd lasso_fixed_lambda_cd(const StandardizedDataset& data, double lambda,
                                      const OracleConfig& cfg = {});

/// Objective value of ||y - X b||^2 + lambda sum|b_j|.
double lasso_objective(const StandardizedDataset& data, const Eigen::VectorXd& beta,
                       double lambda);

/// Numerical realization of the inf over alpha: minimum of loss_rank_alpha
/// over a dense log grid.
double loss_rank_grid_min(const CriterionInput& input, const OracleConfig& cfg = {});

}  // namespace lrsel
