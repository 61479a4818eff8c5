#include <doctest.h>

#include <lrsel/lasso_path.hpp>
#include <lrsel/oracle.hpp>
#include <lrsel/rng.hpp>
#include <lrsel/selector.hpp>
#include <lrsel/simbench.hpp>

#include <cmath>

using namespace lrsel;

namespace {

StandardizedDataset wrap(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    StandardizedDataset sd;
    sd.Xs = X;
    sd.ys = y;
    sd.col_scales = Eigen::VectorXd::Ones(X.cols());
    sd.col_means = Eigen::VectorXd::Zero(X.cols());
    sd.y_mean = 0.0;
    return sd;
}

StandardizedDataset random_standardized(int n, int d, std::uint64_t seed) {
    CounterRng rng(seed, 0, 9);
    Dataset ds;
    ds.X.resize(n, d);
    ds.y.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) ds.X(i, j) = rng.normal();
        ds.y(i) = rng.normal();
    }
    return standardize(ds);
}

}  // namespace

TEST_CASE("coordinate descent solves the single covariate problem") {
    Eigen::MatrixXd X(3, 1);
    X << 1, 0, 0;
    Eigen::VectorXd y(3);
    y << 4, 0, 0;
    auto sd = wrap(X, y);
    Eigen::VectorXd beta = lasso_fixed_lambda_cd(sd, 2.0);
    CHECK(beta(0) == doctest::Approx(3.0).epsilon(1e-8));  // (8 - lambda)/2
}

TEST_CASE("coordinate descent returns zero at and above lambda_max") {
    auto sd = random_standardized(15, 4, 2);
    const double lambda_max = 2.0 * (sd.Xs.transpose() * sd.ys).cwiseAbs().maxCoeff();
    CHECK(lasso_fixed_lambda_cd(sd, lambda_max).isZero());
    CHECK(lasso_fixed_lambda_cd(sd, 2.0 * lambda_max).isZero());
}

TEST_CASE("coordinate descent satisfies its own KKT conditions") {
    auto sd = random_standardized(20, 6, 3);
    const double lambda_max = 2.0 * (sd.Xs.transpose() * sd.ys).cwiseAbs().maxCoeff();
    for (double f : {0.5, 0.1, 0.01}) {
        const double lambda = f * lambda_max;
        Eigen::VectorXd beta = lasso_fixed_lambda_cd(sd, lambda);
        Eigen::VectorXd corr = 2.0 * sd.Xs.transpose() * (sd.ys - sd.Xs * beta);
        for (int j = 0; j < sd.d(); ++j) {
            if (beta(j) != 0.0) {
                CHECK(corr(j) ==
                      doctest::Approx(lambda * (beta(j) > 0 ? 1.0 : -1.0)).epsilon(1e-6));
            } else {
                CHECK(std::abs(corr(j)) <= lambda * (1.0 + 1e-8) + 1e-8);
            }
        }
    }
}

TEST_CASE("lasso objective is consistent with directly computed value") {
    auto sd = random_standardized(10, 3, 4);
    Eigen::VectorXd beta(3);
    beta << 1.0, -2.0, 0.5;
    const double expect =
        (sd.ys - sd.Xs * beta).squaredNorm() + 0.7 * beta.cwiseAbs().sum();
    CHECK(lasso_objective(sd, beta, 0.7) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("exhaustive search: trivial one-covariate case") {
    // needs real signal: with pure noise the single subset can be LR-infeasible
    CounterRng rng(5, 0, 9);
    Dataset ds;
    ds.X.resize(10, 1);
    ds.y.resize(10);
    for (int i = 0; i < 10; ++i) {
        ds.X(i, 0) = rng.normal();
        ds.y(i) = 2.0 * ds.X(i, 0) + 0.1 * rng.normal();
    }
    auto sd = standardize(ds);
    std::uint64_t visited = 0;
    auto best = best_subset_exhaustive(sd, Criterion::LR, {}, &visited);
    CHECK(best == std::vector<int>{0});
    CHECK(visited == 1);
}

TEST_CASE("exhaustive search enumerates 2^d - 1 subsets") {
    auto sd = random_standardized(25, 6, 6);
    std::uint64_t visited = 0;
    best_subset_exhaustive(sd, Criterion::BIC, {}, &visited);
    CHECK(visited == 63);
}

TEST_CASE("exhaustive search refuses large dimensions") {
    auto sd = random_standardized(10, 5, 7);
    OracleConfig cfg;
    cfg.max_subset_dim = 4;
    CHECK_THROWS_AS(best_subset_exhaustive(sd, Criterion::LR, cfg), DimensionTooLarge);
}

TEST_CASE("exhaustive search recovers a noiseless sparse truth") {
    CounterRng design(99, 0, 1);
    Dataset ds;
    ds.X = sample_ar1_design(60, 8, 0.5, design);
    Eigen::VectorXd beta(8);
    beta << 3, 1.5, 0, 0, 2, 0, 0, 0;
    ds.y = ds.X * beta;
    auto sd = standardize(ds);
    CHECK(best_subset_exhaustive(sd, Criterion::LR) == std::vector<int>{0, 1, 4});
    CHECK(best_subset_exhaustive(sd, Criterion::BIC) == std::vector<int>{0, 1, 4});
}

TEST_CASE("loss_rank_grid_min brackets the closed form") {
    CounterRng rng(12, 0, 3);
    for (int t = 0; t < 20; ++t) {
        CriterionInput in;
        in.n = 30 + static_cast<int>(rng.uniform() * 200);
        in.rho = 0.1 + 0.6 * rng.uniform();
        in.df = 1 + static_cast<int>(rng.uniform() * 5);
        in.y_sq_norm = in.n * (0.5 + rng.uniform());
        const double closed = loss_rank(in).value;
        const double grid = loss_rank_grid_min(in);
        CHECK(grid >= closed - 1e-9);
        CHECK(grid == doctest::Approx(closed).epsilon(1e-6));
    }
}

TEST_CASE("path solutions agree with coordinate descent on objective value") {
    for (std::uint64_t seed = 31; seed <= 35; ++seed) {
        auto sd = random_standardized(30, 10, seed);
        auto path = compute_lars_path(sd);
        for (double f : {0.6, 0.25, 0.05}) {
            const double lambda = f * path.lambda_max;
            const double obj_path = lasso_objective(sd, coefficients_at(path, lambda), lambda);
            const double obj_cd = lasso_objective(sd, lasso_fixed_lambda_cd(sd, lambda), lambda);
            CHECK(obj_path ==
                  doctest::Approx(obj_cd).epsilon(1e-6));
        }
    }
}
