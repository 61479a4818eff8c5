#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lrsel/rng.hpp"
#include "lrsel/selector.hpp"

namespace lrsel {

/// One Monte Carlo study cell: y = X beta_true + sigma eps, X rows Gaussian
/// with AR(1) covariance corr^|i-j|.
struct SimDesign {
    int n = 100;
    int d = 8;
    Eigen::VectorXd beta_true;
    double sigma = 1.0;
    double corr = 0.5;
    int reps = 100;
    std::set<Criterion> criteria = {Criterion::LR, Criterion::BIC};
    std::uint64_t seed = 1;
    bool fixed_design = false;  // draw X once instead of per replication

    void validate() const;
    std::vector<int> truth() const;  // support of beta_true, ascending

    static SimDesign example1();  // beta = (3, 1.5, 0, 0, 2, 0, 0, 0)
    static SimDesign example2();  // d = 300, beta_30 = beta_60 = ... = 10
};

struct RepOutcome {
    std::map<Criterion, FitClass> classification;
    std::map<Criterion, int> zero_count;  // d - |selected|
    bool failed = false;
    std::string error;
};

struct CriterionTally {
    int underfit = 0;
    int correct = 0;
    int overfit = 0;
    double avg_zeros = 0.0;
};

struct MonteCarloTally {
    std::map<Criterion, CriterionTally> per_criterion;
    int reps = 0;
    std::vector<std::pair<int, std::string>> failures;  // (rep index, message)
};

/// n rows from N(0, Sigma), Sigma_ij = corr^|i-j|, via a triangular factor.
Eigen::MatrixXd sample_ar1_design(int n, int d, double corr, CounterRng& rng);

/// Triangular factor L with L L' = Sigma (exposed for testing).
Eigen::MatrixXd ar1_cholesky(int d, double corr);

RepOutcome run_replication(const SimDesign& design, int rep_index);

/// Aggregates run_replication over all reps; bit-identical for any worker
/// count given the same seed.
MonteCarloTally run_study(const SimDesign& design, int workers = 1);

std::string tally_to_table(const MonteCarloTally& tally, const SimDesign& design);
std::string tally_to_csv(const MonteCarloTally& tally, const SimDesign& design);
std::string tally_to_json(const MonteCarloTally& tally, const SimDesign& design);

}  // namespace lrsel
