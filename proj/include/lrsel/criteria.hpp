#pragma once

#include <Eigen/Dense>
#include <string>

#include "lrsel/linreg.hpp"

namespace lrsel {

enum class Criterion { LR, BIC, GCV, BIC_TILDE };

std::string criterion_name(Criterion c);
Criterion criterion_from_name(const std::string& name);

/// Scale-free summary of an OLS refit, the input to the subset criteria.
struct CriterionInput {
    int n = 0;
    double y_sq_norm = 0.0;
    double rho = 0.0;  // RSS / ||y||^2, strictly inside (0, 1)
    int df = 0;        // 1 <= df <= n-1

    void validate() const;
};

struct CriterionScore {
    Criterion criterion = Criterion::LR;
    double value = 0.0;  // +inf exactly when feasible == false
    bool feasible = true;
};

/// KL(Bernoulli(p) || Bernoulli(q)).
double kl_bernoulli(double p, double q);

/// Entropy -p log p - (1-p) log(1-p).
double entropy(double p);

/// The minimizer rho*df / (n(1-rho) - df) of the alpha-regularized loss
/// rank; exists iff n(1-rho) > df. Throws Infeasible otherwise.
double alpha_star(const CriterionInput& input);

/// (n/2) log||y||^2 + (n/2) log(rho+a) - (df/2) log a - ((n-df)/2) log(1+a).
double loss_rank_alpha(const CriterionInput& input, double alpha);

/// Minimized loss rank: (n/2) log||y||^2 - (n/2) KL(df/n || 1-rho) when
/// n(1-rho) > df; +inf (infeasible) otherwise.
CriterionScore loss_rank(const CriterionInput& input);

/// (n/2) log(sigma2_hat) + (df/2) log n. Throws DomainError for
/// sigma2_hat <= 0.
double bic(int n, double sigma2_hat, int df);

/// Effective degrees of freedom of the lasso fit at lambda:
/// tr[X_A (X_A' X_A + sqrt(n-1) lambda W^-)^{-1} X_A'], W = diag(|beta_j|)
/// on the active set A. The sqrt(n-1) factor puts lambda on the scale of
/// the correlation-form Gram matrix (unit-norm columns).
double lasso_df(const StandardizedDataset& data, const Eigen::VectorXd& beta_lambda,
                double lambda);

/// GCV at lambda, evaluated on the lasso coefficients (not the refit).
double gcv_lasso(const StandardizedDataset& data, const Eigen::VectorXd& beta_lambda,
                 double lambda);

/// log(RSS/n) + DF_lambda log(n)/n, on the lasso coefficients.
double bic_tilde(const StandardizedDataset& data, const Eigen::VectorXd& beta_lambda,
                 double lambda);

}  // namespace lrsel
