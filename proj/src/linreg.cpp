#include "lrsel/linreg.hpp"

#include <algorithm>
#include <cmath>

namespace lrsel {

void Dataset::validate() const {
    const auto n = X.rows();
    const auto d = X.cols();
    if (n < 2 || d < 1) {
        throw DomainError("need n >= 2 and d >= 1");
    }
    if (y.size() != n) {
        throw DomainError("X and y row counts disagree");
    }
    if (!X.allFinite()) {
        throw NonFiniteInput("design matrix");
    }
    if (!y.allFinite()) {
        throw NonFiniteInput("response");
    }
    if (!names.empty() && static_cast<Eigen::Index>(names.size()) != d) {
        throw DomainError("names length must equal the number of columns");
    }
}

StandardizedDataset standardize(const Dataset& dataset) {
    dataset.validate();
    const auto n = dataset.X.rows();
    const auto d = dataset.X.cols();

    StandardizedDataset out;
    out.col_means = dataset.X.colwise().mean();
    out.col_scales.resize(d);
    out.Xs.resize(n, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        Eigen::VectorXd centered = dataset.X.col(j).array() - out.col_means(j);
        const double sd = std::sqrt(centered.squaredNorm() / static_cast<double>(n - 1));
        if (sd <= 0.0) {
            throw ConstantColumn(static_cast<int>(j));
        }
        out.col_scales(j) = sd;
        out.Xs.col(j) = centered / sd;
    }
    out.y_mean = dataset.y.mean();
    out.ys = dataset.y.array() - out.y_mean;
    return out;
}

OlsFit ols_fit(const StandardizedDataset& data, const std::vector<int>& subset) {
    if (subset.empty()) {
        throw EmptySubset();
    }
    const int n = data.n();
    const int d = data.d();
    std::vector<int> cols = subset;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    const int k = static_cast<int>(cols.size());
    if (k > n - 1) {
        throw DomainError("subset size exceeds n - 1");
    }

    Eigen::MatrixXd Xs(n, k);
    for (int c = 0; c < k; ++c) {
        const int j = cols[c];
        if (j < 0 || j >= d) {
            throw DomainError("subset index out of range");
        }
        Xs.col(c) = data.Xs.col(j);
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
    const Eigen::VectorXd rdiag = qr.matrixR().diagonal().head(k).cwiseAbs();
    const double rmax = rdiag.maxCoeff();
    if (rmax <= 0.0 || rdiag.minCoeff() < 1e-10 * rmax) {
        throw RankDeficient("subset of size " + std::to_string(k));
    }

    OlsFit fit;
    fit.subset = cols;
    fit.beta = qr.solve(data.ys);
    const double rss = (data.ys - Xs * fit.beta).squaredNorm();
    const double ysq = data.ys.squaredNorm();
    fit.sigma2_hat = rss / n;
    fit.rho = ysq > 0.0 ? rss / ysq : 0.0;
    fit.df = k;
    return fit;
}

double squared_norm(const Eigen::VectorXd& v) { return v.squaredNorm(); }

}  // namespace lrsel
