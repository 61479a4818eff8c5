#include "lrsel/criteria.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace lrsel {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::LR: return "LR";
        case Criterion::BIC: return "BIC";
        case Criterion::GCV: return "GCV";
        case Criterion::BIC_TILDE: return "BIC_TILDE";
    }
    return "?";
}

Criterion criterion_from_name(const std::string& name) {
    if (name == "LR") return Criterion::LR;
    if (name == "BIC") return Criterion::BIC;
    if (name == "GCV") return Criterion::GCV;
    if (name == "BIC_TILDE" || name == "BIC~") return Criterion::BIC_TILDE;
    throw DomainError("unknown criterion '" + name + "'");
}

void CriterionInput::validate() const {
    if (n < 2) throw DomainError("criterion input needs n >= 2");
    if (!(y_sq_norm > 0.0)) throw DomainError("criterion input needs ||y||^2 > 0");
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("rho must lie strictly in (0,1)");
    if (df < 1 || df > n - 1) throw DomainError("df must lie in [1, n-1]");
}

double kl_bernoulli(double p, double q) {
    if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) {
        throw DomainError("kl_bernoulli arguments must lie strictly in (0,1)");
    }
    return p * std::log(p / q) + (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
}

double entropy(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("entropy argument must lie strictly in (0,1)");
    }
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

double alpha_star(const CriterionInput& input) {
    input.validate();
    const double denom = input.n * (1.0 - input.rho) - input.df;
    if (!(denom > 0.0)) {
        throw Infeasible();
    }
    return input.rho * input.df / denom;
}

double loss_rank_alpha(const CriterionInput& input, double alpha) {
    input.validate();
    if (!(alpha > 0.0)) {
        throw DomainError("alpha must be positive");
    }
    const double n = input.n;
    const double df = input.df;
    return 0.5 * n * std::log(input.y_sq_norm) + 0.5 * n * std::log(input.rho + alpha) -
           0.5 * df * std::log(alpha) - 0.5 * (n - df) * std::log1p(alpha);
}

CriterionScore loss_rank(const CriterionInput& input) {
    input.validate();
    CriterionScore score{Criterion::LR, kInf, false};
    if (!(input.n * (1.0 - input.rho) > input.df)) {
        return score;
    }
    const double n = input.n;
    const double p = input.df / n;
    // KL(p || 1-rho) written in terms of rho directly, so that rho near 0
    // does not lose precision through 1-(1-rho)
    const double kl = p * std::log(p / (1.0 - input.rho)) +
                      (1.0 - p) * std::log((1.0 - p) / input.rho);
    score.value = 0.5 * n * std::log(input.y_sq_norm) - 0.5 * n * kl;
    score.feasible = true;
    return score;
}

double bic(int n, double sigma2_hat, int df) {
    if (n < 1 || df < 0) {
        throw DomainError("bic needs n >= 1 and df >= 0");
    }
    if (!(sigma2_hat > 0.0)) {
        throw DomainError("bic needs sigma2_hat > 0");
    }
    return 0.5 * n * std::log(sigma2_hat) + 0.5 * df * std::log(static_cast<double>(n));
}

namespace {

struct LassoDfParts {
    std::vector<int> active;
    double df = 0.0;
    double rss = 0.0;
};

LassoDfParts lasso_df_parts(const StandardizedDataset& data, const Eigen::VectorXd& beta,
                            double lambda) {
    if (!(lambda > 0.0)) {
        throw DomainError("lambda must be positive");
    }
    if (beta.size() != data.d()) {
        throw DomainError("coefficient vector length mismatch");
    }
    LassoDfParts parts;
    for (int j = 0; j < data.d(); ++j) {
        if (beta(j) != 0.0) {
            parts.active.push_back(j);
        }
    }
    if (parts.active.empty()) {
        throw AllZeroCoefficients();
    }
    const int k = static_cast<int>(parts.active.size());
    Eigen::MatrixXd Xa(data.n(), k);
    for (int c = 0; c < k; ++c) {
        Xa.col(c) = data.Xs.col(parts.active[c]);
    }
    Eigen::MatrixXd M = Xa.transpose() * Xa;
    const Eigen::MatrixXd G = M;
    // The ridge term is weighted as if the Gram matrix were on the
    // correlation scale (unit-norm design columns): with columns scaled to
    // unit sample sd, G has diagonal n-1, so the penalty parameter is put on
    // a comparable scale by the factor sqrt(n-1).
    const double weight = std::sqrt(static_cast<double>(data.n() - 1)) * lambda;
    for (int c = 0; c < k; ++c) {
        M(c, c) += weight / std::abs(beta(parts.active[c]));
    }
    // DF = tr[(G + sqrt(n-1) lambda W^-1)^{-1} G]
    parts.df = M.ldlt().solve(G).trace();
    parts.rss = (data.ys - data.Xs * beta).squaredNorm();
    return parts;
}

}  // namespace

double lasso_df(const StandardizedDataset& data, const Eigen::VectorXd& beta_lambda,
                double lambda) {
    return lasso_df_parts(data, beta_lambda, lambda).df;
}

double gcv_lasso(const StandardizedDataset& data, const Eigen::VectorXd& beta_lambda,
                 double lambda) {
    const auto parts = lasso_df_parts(data, beta_lambda, lambda);
    const double n = data.n();
    if (parts.df >= n) {
        throw DegreesOfFreedomOverflow();
    }
    const double denom = 1.0 - parts.df / n;
    return (parts.rss / n) / (denom * denom);
}

double bic_tilde(const StandardizedDataset& data, const Eigen::VectorXd& beta_lambda,
                 double lambda) {
    const auto parts = lasso_df_parts(data, beta_lambda, lambda);
    const double n = data.n();
    if (parts.df >= n) {
        throw DegreesOfFreedomOverflow();
    }
    if (!(parts.rss > 0.0)) {
        throw PerfectFit();
    }
    return std::log(parts.rss / n) + parts.df * std::log(n) / n;
}

}  // namespace lrsel
