#include "lrsel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lrsel/selector.hpp"

namespace lrsel {

std::vector<int> best_subset_exhaustive(const StandardizedDataset& data, Criterion criterion,
                                        const OracleConfig& cfg, std::uint64_t* visited) {
    if (criterion != Criterion::LR && criterion != Criterion::BIC) {
        throw DomainError("exhaustive search supports LR and BIC");
    }
    const int d = data.d();
    const int limit = std::min(cfg.max_subset_dim, 20);
    if (d > limit) {
        throw DimensionTooLarge(d, limit);
    }
    const int n = data.n();
    const double ysq = data.ys.squaredNorm();

    std::uint64_t count = 0;
    bool found = false;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<int> best;
    for (std::uint64_t mask = 1; mask < (1ULL << d); ++mask) {
        ++count;
        std::vector<int> subset;
        for (int j = 0; j < d; ++j) {
            if (mask & (1ULL << j)) subset.push_back(j);
        }
        if (static_cast<int>(subset.size()) > n - 1) continue;
        OlsFit fit;
        try {
            fit = ols_fit(data, subset);
        } catch (const RankDeficient&) {
            continue;
        }
        const CriterionScore score = score_subset_criterion(criterion, n, ysq, fit);
        if (!score.feasible || !std::isfinite(score.value)) continue;
        const double tol = 1e-9 * std::max({std::abs(score.value), std::abs(best_value), 1.0});
        bool take;
        if (!found) {
            take = true;
        } else if (std::abs(score.value - best_value) <= tol) {
            take = subset.size() != best.size() ? subset.size() < best.size() : subset < best;
        } else {
            take = score.value < best_value;
        }
        if (take) {
            found = true;
            best_value = score.value;
            best = subset;
        }
    }
    if (visited) *visited = count;
    if (!found) {
        throw NoCandidates();
    }
    return best;
}

Eigen::VectorXd lasso_fixed_lambda_cd(const StandardizedDataset& data, double lambda,
                                      const OracleConfig& cfg) {
    if (!(lambda > 0.0)) {
        throw DomainError("lambda must be positive");
    }
    const Eigen::MatrixXd& X = data.Xs;
    const Eigen::VectorXd& y = data.ys;
    const int d = data.d();
    Eigen::VectorXd colsq(d);
    for (int j = 0; j < d; ++j) colsq(j) = X.col(j).squaredNorm();

    Eigen::VectorXd beta = Eigen::VectorXd::Zero(d);
    Eigen::VectorXd r = y;
    for (long sweep = 0; sweep < cfg.cd_max_iters; ++sweep) {
        double max_change = 0.0;
        for (int j = 0; j < d; ++j) {
            if (colsq(j) == 0.0) continue;
            const double z = X.col(j).dot(r) + beta(j) * colsq(j);
            double next = 0.0;
            if (z > 0.5 * lambda) {
                next = (z - 0.5 * lambda) / colsq(j);
            } else if (z < -0.5 * lambda) {
                next = (z + 0.5 * lambda) / colsq(j);
            }
            const double change = next - beta(j);
            if (change != 0.0) {
                r -= change * X.col(j);
                beta(j) = next;
                max_change = std::max(max_change, std::abs(change));
            }
        }
        if (max_change < cfg.cd_tol) {
            return beta;
        }
    }
    throw NoConvergence(cfg.cd_max_iters);
}

double lasso_objective(const StandardizedDataset& data, const Eigen::VectorXd& beta,
                       double lambda) {
    return (data.ys - data.Xs * beta).squaredNorm() + lambda * beta.cwiseAbs().sum();
}

double loss_rank_grid_min(const CriterionInput& input, const OracleConfig& cfg) {
    if (!(input.n * (1.0 - input.rho) > input.df)) {
        throw Infeasible();
    }
    const double lo = cfg.alpha_log_min * std::log(10.0);
    const double hi = cfg.alpha_log_max * std::log(10.0);
    const long count = std::max<long>(2, cfg.alpha_grid_count);
    double best = std::numeric_limits<double>::infinity();
    for (long i = 0; i < count; ++i) {
        const double alpha = std::exp(lo + (hi - lo) * i / (count - 1));
        best = std::min(best, loss_rank_alpha(input, alpha));
    }
    return best;
}

}  // namespace lrsel
