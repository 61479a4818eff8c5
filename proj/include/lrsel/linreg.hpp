#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "lrsel/errors.hpp"

namespace lrsel {

/// Raw regression data: n observations of d covariates plus a response.
struct Dataset {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    std::vector<std::string> names;  // optional, one label per column

    /// Throws NonFiniteInput / DomainError if the basic invariants fail.
    void validate() const;
};

/// Centered response and centered, unit-sd columns, plus the transform
/// metadata needed to map coefficients back to the raw scale.
struct StandardizedDataset {
    Eigen::MatrixXd Xs;          // columns mean 0, sample sd 1 (divisor n-1)
    Eigen::VectorXd ys;          // mean 0
    Eigen::VectorXd col_scales;  // raw column sd, all positive
    Eigen::VectorXd col_means;
    double y_mean = 0.0;

    int n() const { return static_cast<int>(Xs.rows()); }
    int d() const { return static_cast<int>(Xs.cols()); }
};

/// Unpenalized least-squares refit of a subset, on the standardized scale.
struct OlsFit {
    std::vector<int> subset;  // ascending 0-based column indices
    Eigen::VectorXd beta;     // one coefficient per subset entry
    double sigma2_hat = 0.0;  // RSS / n
    double rho = 0.0;         // RSS / ||y||^2
    int df = 0;               // |subset|
};

StandardizedDataset standardize(const Dataset& dataset);

/// beta solves the normal equations for X_S; solved via column-pivoted QR.
/// Throws EmptySubset, RankDeficient, DomainError.
OlsFit ols_fit(const StandardizedDataset& data, const std::vector<int>& subset);

double squared_norm(const Eigen::VectorXd& v);

}  // namespace lrsel
