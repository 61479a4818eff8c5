#include "lrsel/selector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lrsel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// rho = 0 (perfect fit) and rho = 1 (null fit) sit outside the criteria's
// domain; scoring clamps into the open interval so a sweep stays total.
constexpr double kRhoClamp = 1e-12;

double clamp_rho(double rho) {
    return std::min(std::max(rho, kRhoClamp), 1.0 - kRhoClamp);
}

bool better(const ChosenModel& incumbent, double value, const CandidateModel& cand) {
    const double tol = 1e-9 * std::max({std::abs(value), std::abs(incumbent.score), 1.0});
    if (std::abs(value - incumbent.score) <= tol) {
        if (cand.df != static_cast<int>(incumbent.subset.size())) {
            return cand.df < static_cast<int>(incumbent.subset.size());
        }
        return cand.subset < incumbent.subset;
    }
    return value < incumbent.score;
}

ChosenModel finish_chosen(const StandardizedDataset& data, ChosenModel chosen) {
    const int k = static_cast<int>(chosen.subset.size());
    chosen.raw_coefficients.resize(k);
    chosen.raw_intercept = data.y_mean;
    for (int i = 0; i < k; ++i) {
        const int j = chosen.subset[i];
        chosen.raw_coefficients(i) = chosen.fit.beta(i) / data.col_scales(j);
        chosen.raw_intercept -= chosen.raw_coefficients(i) * data.col_means(j);
    }
    return chosen;
}

}  // namespace

std::string fit_class_name(FitClass c) {
    switch (c) {
        case FitClass::Underfitted: return "Underfitted";
        case FitClass::Correct: return "Correct";
        case FitClass::Overfitted: return "Overfitted";
    }
    return "?";
}

CriterionScore score_subset_criterion(Criterion criterion, int n, double y_sq_norm,
                                      const OlsFit& fit) {
    const double rho = clamp_rho(fit.rho);
    if (criterion == Criterion::LR) {
        CriterionInput input{n, y_sq_norm, rho, fit.df};
        return loss_rank(input);
    }
    if (criterion == Criterion::BIC) {
        const double sigma2 = rho * y_sq_norm / n;
        return CriterionScore{Criterion::BIC, bic(n, sigma2, fit.df), true};
    }
    throw DomainError("score_subset_criterion handles LR and BIC only");
}

SelectionReport select_standardized(const StandardizedDataset& data,
                                    const std::set<Criterion>& criteria,
                                    const SelectorOptions& options) {
    if (criteria.empty()) {
        throw DomainError("at least one criterion must be requested");
    }
    const int n = data.n();
    const double ysq = data.ys.squaredNorm();

    SelectionReport report;
    report.n = n;
    report.d = data.d();

    const LassoPath path = compute_lars_path(data, options.max_steps);
    report.lambda_max = path.lambda_max;
    const auto candidates = candidate_subsets(path, data, &report.diagnostics);

    const bool want_lr = criteria.count(Criterion::LR) > 0;
    const bool want_bic = criteria.count(Criterion::BIC) > 0;
    for (const auto& cand : candidates) {
        ScoredCandidate sc;
        sc.model = cand;
        if (want_lr) sc.scores[Criterion::LR] = score_subset_criterion(Criterion::LR, n, ysq, cand.fit);
        if (want_bic) sc.scores[Criterion::BIC] = score_subset_criterion(Criterion::BIC, n, ysq, cand.fit);
        report.candidates.push_back(std::move(sc));
    }

    // Step-function criteria: argmin over the candidate family.
    for (const Criterion crit : {Criterion::LR, Criterion::BIC}) {
        if (criteria.count(crit) == 0) continue;
        bool found = false;
        ChosenModel chosen;
        chosen.score = kInf;
        for (const auto& sc : report.candidates) {
            const auto& score = sc.scores.at(crit);
            if (!score.feasible || !std::isfinite(score.value)) continue;
            if (!found || better(chosen, score.value, sc.model)) {
                found = true;
                chosen.subset = sc.model.subset;
                chosen.lambda_lo = sc.model.lambda_lo;
                chosen.lambda_hi = sc.model.lambda_hi;
                chosen.score = score.value;
                chosen.fit = sc.model.fit;
            }
        }
        if (!found) {
            throw AllInfeasible(criterion_name(crit));
        }
        report.chosen[crit] = finish_chosen(data, std::move(chosen));
    }

    // Continuous-in-lambda criteria: minimized over a log-spaced grid.
    for (const Criterion crit : {Criterion::GCV, Criterion::BIC_TILDE}) {
        if (criteria.count(crit) == 0) continue;
        const double lo = path.lambda_max * options.grid.min_factor;
        const int count = std::max(2, options.grid.count);
        const double step = std::log(path.lambda_max / lo) / (count - 1);
        bool found = false;
        double best_value = kInf;
        double best_lambda = 0.0;
        Eigen::VectorXd best_beta;
        for (int g = 0; g < count; ++g) {
            const double lambda = path.lambda_max * std::exp(-step * g);
            const Eigen::VectorXd beta = coefficients_at(path, lambda);
            if ((beta.array() != 0.0).count() > n - 1) {
                continue;  // no OLS refit exists for this active set
            }
            double value;
            try {
                value = crit == Criterion::GCV ? gcv_lasso(data, beta, lambda)
                                               : bic_tilde(data, beta, lambda);
            } catch (const Error&) {
                continue;  // all-zero beta, DF >= n, or a perfect fit
            }
            if (value < best_value) {
                best_value = value;
                best_lambda = lambda;
                best_beta = beta;
                found = true;
            }
        }
        if (!found) {
            throw AllInfeasible(criterion_name(crit));
        }
        ChosenModel chosen;
        chosen.score = best_value;
        for (int j = 0; j < report.d; ++j) {
            if (best_beta(j) != 0.0) chosen.subset.push_back(j);
        }
        chosen.lambda_lo = chosen.lambda_hi = best_lambda;
        for (const auto& cand : candidates) {
            if (cand.subset == chosen.subset) {
                chosen.lambda_lo = cand.lambda_lo;
                chosen.lambda_hi = cand.lambda_hi;
                break;
            }
        }
        chosen.fit = ols_fit(data, chosen.subset);
        report.chosen[crit] = finish_chosen(data, std::move(chosen));
    }
    return report;
}

SelectionReport select(const Dataset& dataset, const std::set<Criterion>& criteria,
                       const SelectorOptions& options) {
    const StandardizedDataset data = standardize(dataset);
    SelectionReport report = select_standardized(data, criteria, options);
    report.names = dataset.names;
    return report;
}

FitClass classify_fit(const std::vector<int>& selected, const std::vector<int>& truth) {
    if (truth.empty()) {
        throw DomainError("truth subset must be nonempty");
    }
    std::vector<int> sel = selected, tru = truth;
    std::sort(sel.begin(), sel.end());
    std::sort(tru.begin(), tru.end());
    if (sel == tru) {
        return FitClass::Correct;
    }
    if (sel.size() > tru.size() && std::includes(sel.begin(), sel.end(), tru.begin(), tru.end())) {
        return FitClass::Overfitted;
    }
    return FitClass::Underfitted;
}

}  // namespace lrsel
