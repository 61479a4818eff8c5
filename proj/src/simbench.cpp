#include "lrsel/simbench.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace lrsel {

namespace {
// Stream roles within a replication's substream family.
constexpr std::uint64_t kRoleDesign = 1;
constexpr std::uint64_t kRoleNoise = 2;
}  // namespace

void SimDesign::validate() const {
    if (n < 2 || d < 1) throw DomainError("need n >= 2 and d >= 1");
    if (beta_true.size() != d) throw DomainError("beta_true length must equal d");
    if (truth().empty()) throw DomainError("beta_true must have a nonzero entry");
    if (sigma < 0.0) throw DomainError("sigma must be nonnegative");
    if (!(corr >= 0.0 && corr < 1.0)) throw DomainError("corr must lie in [0,1)");
    if (reps < 1) throw DomainError("reps must be >= 1");
    if (criteria.empty()) throw DomainError("at least one criterion is required");
}

std::vector<int> SimDesign::truth() const {
    std::vector<int> support;
    for (int j = 0; j < beta_true.size(); ++j) {
        if (beta_true(j) != 0.0) support.push_back(j);
    }
    return support;
}

SimDesign SimDesign::example1() {
    SimDesign design;
    design.n = 100;
    design.d = 8;
    design.beta_true.resize(8);
    design.beta_true << 3.0, 1.5, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0;
    design.sigma = 1.0;
    design.corr = 0.5;
    return design;
}

SimDesign SimDesign::example2() {
    SimDesign design;
    design.n = 500;
    design.d = 300;
    design.beta_true = Eigen::VectorXd::Zero(300);
    for (int j = 30; j <= 300; j += 30) {
        design.beta_true(j - 1) = 10.0;
    }
    design.sigma = 1.0;
    design.corr = 0.5;
    return design;
}

Eigen::MatrixXd ar1_cholesky(int d, double corr) {
    Eigen::MatrixXd sigma(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            sigma(i, j) = std::pow(corr, std::abs(i - j));
        }
    }
    return Eigen::LLT<Eigen::MatrixXd>(sigma).matrixL();
}

Eigen::MatrixXd sample_ar1_design(int n, int d, double corr, CounterRng& rng) {
    const Eigen::MatrixXd L = ar1_cholesky(d, corr);
    Eigen::MatrixXd X(n, d);
    Eigen::VectorXd z(d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) z(j) = rng.normal();
        X.row(i) = (L * z).transpose();
    }
    return X;
}

RepOutcome run_replication(const SimDesign& design, int rep_index) {
    design.validate();
    if (rep_index < 0 || rep_index >= design.reps) {
        throw DomainError("rep_index out of range");
    }
    RepOutcome outcome;
    try {
        const std::uint64_t design_rep = design.fixed_design ? 0 : rep_index;
        CounterRng rng_x(design.seed, design_rep, kRoleDesign);
        CounterRng rng_e(design.seed, rep_index, kRoleNoise);

        Dataset data;
        data.X = sample_ar1_design(design.n, design.d, design.corr, rng_x);
        Eigen::VectorXd eps(design.n);
        for (int i = 0; i < design.n; ++i) eps(i) = rng_e.normal();
        data.y = data.X * design.beta_true + design.sigma * eps;

        const SelectionReport report = select(data, design.criteria);
        const std::vector<int> truth = design.truth();
        for (const auto& [crit, chosen] : report.chosen) {
            outcome.classification[crit] = classify_fit(chosen.subset, truth);
            outcome.zero_count[crit] = design.d - static_cast<int>(chosen.subset.size());
        }
    } catch (const std::exception& e) {
        outcome.failed = true;
        outcome.error = e.what();
    }
    return outcome;
}

MonteCarloTally run_study(const SimDesign& design, int workers) {
    design.validate();
    if (workers < 1) throw DomainError("workers must be >= 1");

    std::vector<RepOutcome> outcomes(design.reps);
    workers = std::min(workers, design.reps);
    if (workers == 1) {
        for (int r = 0; r < design.reps; ++r) outcomes[r] = run_replication(design, r);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int r = w; r < design.reps; r += workers) {
                    outcomes[r] = run_replication(design, r);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    // Order-independent reduction in rep-index order.
    MonteCarloTally tally;
    tally.reps = design.reps;
    std::map<Criterion, long> zero_sums;
    int ok = 0;
    for (int r = 0; r < design.reps; ++r) {
        const auto& outcome = outcomes[r];
        if (outcome.failed) {
            tally.failures.emplace_back(r, outcome.error);
            continue;
        }
        ++ok;
        for (const auto& [crit, cls] : outcome.classification) {
            auto& cell = tally.per_criterion[crit];
            switch (cls) {
                case FitClass::Underfitted: ++cell.underfit; break;
                case FitClass::Correct: ++cell.correct; break;
                case FitClass::Overfitted: ++cell.overfit; break;
            }
            zero_sums[crit] += outcome.zero_count.at(crit);
        }
    }
    for (auto& [crit, cell] : tally.per_criterion) {
        cell.avg_zeros = ok > 0 ? static_cast<double>(zero_sums[crit]) / ok : 0.0;
    }
    return tally;
}

namespace {

double pct(int count, int reps) { return 100.0 * count / reps; }

std::string fmt6(double v) {
    std::ostringstream ss;
    ss << std::setprecision(6) << v;
    return ss.str();
}

}  // namespace

std::string tally_to_table(const MonteCarloTally& tally, const SimDesign& design) {
    std::ostringstream out;
    out << "sigma   n      Method      Under-fitted(%)  Correctly fitted(%)  Overfitted(%)  "
           "Ave. No. of zeros\n";
    bool first = true;
    for (const auto& [crit, cell] : tally.per_criterion) {
        out << std::left << std::setw(8) << (first ? fmt6(design.sigma) : "")
            << std::setw(7) << (first ? std::to_string(design.n) : "")
            << std::setw(12) << criterion_name(crit)
            << std::setw(17) << fmt6(pct(cell.underfit, tally.reps))
            << std::setw(21) << fmt6(pct(cell.correct, tally.reps))
            << std::setw(15) << fmt6(pct(cell.overfit, tally.reps))
            << fmt6(cell.avg_zeros) << "\n";
        first = false;
    }
    if (!tally.failures.empty()) {
        out << "failed replications: " << tally.failures.size() << "\n";
    }
    return out.str();
}

std::string tally_to_csv(const MonteCarloTally& tally, const SimDesign& design) {
    std::ostringstream out;
    out << "sigma,n,method,underfit_pct,correct_pct,overfit_pct,avg_zeros,failures\n";
    out << std::setprecision(17);
    for (const auto& [crit, cell] : tally.per_criterion) {
        out << design.sigma << ',' << design.n << ',' << criterion_name(crit) << ','
            << pct(cell.underfit, tally.reps) << ',' << pct(cell.correct, tally.reps) << ','
            << pct(cell.overfit, tally.reps) << ',' << cell.avg_zeros << ','
            << tally.failures.size() << "\n";
    }
    return out.str();
}

std::string tally_to_json(const MonteCarloTally& tally, const SimDesign& design) {
    nlohmann::json j;
    j["sigma"] = design.sigma;
    j["n"] = design.n;
    j["d"] = design.d;
    j["reps"] = tally.reps;
    j["seed"] = design.seed;
    for (const auto& [crit, cell] : tally.per_criterion) {
        nlohmann::json row;
        row["underfit_pct"] = pct(cell.underfit, tally.reps);
        row["correct_pct"] = pct(cell.correct, tally.reps);
        row["overfit_pct"] = pct(cell.overfit, tally.reps);
        row["avg_zeros"] = cell.avg_zeros;
        j["methods"][criterion_name(crit)] = row;
    }
    j["failures"] = nlohmann::json::array();
    for (const auto& [rep, msg] : tally.failures) {
        j["failures"].push_back({{"rep", rep}, {"error", msg}});
    }
    return j.dump(2) + "\n";
}

}  // namespace lrsel
