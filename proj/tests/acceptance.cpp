// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each block prints the measured quantities next to its bounds so
// a failure is diagnosable from the log alone.

#include <lrsel/csv.hpp>
#include <lrsel/lasso_path.hpp>
#include <lrsel/oracle.hpp>
#include <lrsel/rng.hpp>
#include <lrsel/selector.hpp>
#include <lrsel/simbench.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

using namespace lrsel;

namespace {

int g_failures = 0;

int workers() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 16 ? 16 : hw);
}

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s\n", pass ? "PASS" : "FAIL", index, name.c_str());
    if (!detail.empty()) std::printf("%s", detail.c_str());
    if (!pass) ++g_failures;
}

double pct(int count, int reps) { return 100.0 * count / reps; }

StandardizedDataset random_instance(int n, int d, std::uint64_t seed, double signal) {
    CounterRng rng(seed, 0, 9);
    Dataset ds;
    ds.X.resize(n, d);
    ds.y.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) ds.X(i, j) = rng.normal();
        ds.y(i) = rng.normal();
    }
    if (signal > 0.0) {
        for (int i = 0; i < n; ++i) ds.y(i) += signal * (ds.X(i, 0) - 0.5 * ds.X(i, 1 % d));
    }
    return standardize(ds);
}

void criterion1() {
    auto design = SimDesign::example1();
    design.sigma = 1.0;
    design.n = 100;
    design.reps = 100;
    design.seed = 1;
    design.criteria = {Criterion::LR, Criterion::BIC, Criterion::GCV};
    auto tally = run_study(design, workers());

    const auto& lr = tally.per_criterion.at(Criterion::LR);
    const auto& bic = tally.per_criterion.at(Criterion::BIC);
    const auto& gcv = tally.per_criterion.at(Criterion::GCV);
    const bool pass = tally.failures.empty() && lr.correct >= 87 && bic.correct >= 79 &&
                      gcv.correct <= 10 && gcv.overfit >= 90 && lr.avg_zeros >= 4.8 &&
                      lr.avg_zeros <= 5.0;
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "       LR correct %.0f%% (>=87), BIC correct %.0f%% (>=79), "
                  "GCV correct %.0f%% (<=10) / overfit %.0f%% (>=90), "
                  "LR avg zeros %.3f (in [4.8,5.0]), failures %zu\n",
                  pct(lr.correct, 100), pct(bic.correct, 100), pct(gcv.correct, 100),
                  pct(gcv.overfit, 100), lr.avg_zeros, tally.failures.size());
    report(1, "small-d study, sigma=1, n=100", pass, buf);
}

void criterion2() {
    auto design = SimDesign::example1();
    design.sigma = 3.0;
    design.n = 200;
    design.reps = 100;
    design.seed = 1;
    design.criteria = {Criterion::LR, Criterion::BIC};
    auto tally = run_study(design, workers());

    const auto& lr = tally.per_criterion.at(Criterion::LR);
    const auto& bic = tally.per_criterion.at(Criterion::BIC);
    const bool pass = tally.failures.empty() && lr.correct >= 81 && bic.correct >= 81;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "       LR correct %.0f%% (>=81), BIC correct %.0f%% (>=81)\n",
                  pct(lr.correct, 100), pct(bic.correct, 100));
    report(2, "small-d study, sigma=3, n=200", pass, buf);
}

void criterion3() {
    auto design = SimDesign::example2();
    design.sigma = 1.0;
    design.n = 500;
    design.reps = 25;
    design.seed = 1;
    design.criteria = {Criterion::LR, Criterion::BIC};
    auto tally = run_study(design, workers());

    const auto& lr = tally.per_criterion.at(Criterion::LR);
    const auto& bic = tally.per_criterion.at(Criterion::BIC);
    const bool pass = tally.failures.empty() && pct(lr.correct, 25) >= 88.0 &&
                      lr.avg_zeros >= 289.0 && pct(bic.overfit, 25) >= 40.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "       LR correct %.0f%% (>=88), LR avg zeros %.2f (>=289), "
                  "BIC overfit %.0f%% (>=40), failures %zu\n",
                  pct(lr.correct, 25), lr.avg_zeros, pct(bic.overfit, 25),
                  tally.failures.size());
    report(3, "large-d study, n=500, d=300", pass, buf);
}

void criterion4() {
    auto design = SimDesign::example2();
    design.sigma = 1.0;
    design.n = 100;  // d = 300 > n
    design.reps = 25;
    design.seed = 1;
    design.criteria = {Criterion::LR, Criterion::BIC};
    auto tally = run_study(design, workers());

    const auto& lr = tally.per_criterion.at(Criterion::LR);
    const auto& bic = tally.per_criterion.at(Criterion::BIC);
    const bool pass = tally.failures.empty() && lr.correct > bic.correct;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "       failures %zu (=0), LR correct %.0f%% > BIC correct %.0f%%\n",
                  tally.failures.size(), pct(lr.correct, 25), pct(bic.correct, 25));
    report(4, "d > n study completes, n=100, d=300", pass, buf);
}

void criterion5() {
    auto ds = read_csv_dataset(LRSEL_PROSTATE_CSV);
    auto rep = select(ds, {Criterion::LR, Criterion::BIC, Criterion::GCV, Criterion::BIC_TILDE});
    auto sd = standardize(ds);
    const double ysq = sd.ys.squaredNorm();

    const std::vector<int> lr_expect{0, 1, 4};
    const std::vector<int> gcv_expect{0, 1, 2, 3, 4, 6, 7};
    const std::vector<int> bt_expect{0, 1, 2, 3, 4, 7};
    const bool subsets_ok = rep.chosen.at(Criterion::LR).subset == lr_expect &&
                            rep.chosen.at(Criterion::GCV).subset == gcv_expect &&
                            rep.chosen.at(Criterion::BIC_TILDE).subset == bt_expect;

    auto bic_of = [&](const std::vector<int>& subset) {
        return score_subset_criterion(Criterion::BIC, sd.n(), ysq, ols_fit(sd, subset)).value;
    };
    const double b3 = bic_of(lr_expect);
    const double b6 = bic_of(bt_expect);
    const double b7 = bic_of(gcv_expect);
    const bool order_ok = b3 < b6 && b6 < b7;
    // published values for the same three models
    const bool values_ok = std::abs(b3 - (-25.19)) <= 0.5 && std::abs(b6 - (-21.38)) <= 0.5 &&
                           std::abs(b7 - (-19.20)) <= 0.5;

    char buf[768];
    std::snprintf(buf, sizeof buf,
                  "       subsets %s; BIC %.2f < %.2f < %.2f, ordering %s;\n"
                  "       absolute BIC vs published (-25.19, -21.38, -19.20) within 0.5: %s\n"
                  "       (values differ by a near-constant %.2f; pairwise gaps agree to "
                  "%.2f/%.2f vs 3.81/2.18 -- a sigma^2 scale convention, see README)\n",
                  subsets_ok ? "ok" : "MISMATCH", b3, b6, b7, order_ok ? "ok" : "BROKEN",
                  values_ok ? "yes" : "no", -25.19 - b3, b6 - b3, b7 - b6);
    report(5, "prostate case study", subsets_ok && order_ok && values_ok, buf);
}

bool prop_closed_forms() {
    CounterRng rng(404, 0, 3);
    for (int t = 0; t < 1000; ++t) {
        CriterionInput in;
        in.n = 20 + static_cast<int>(rng.uniform() * 400);
        in.rho = 0.05 + 0.8 * rng.uniform();
        const int cap = static_cast<int>(in.n * (1.0 - in.rho));
        in.df = 1 + static_cast<int>(rng.uniform() * std::max(1, cap - 2));
        in.y_sq_norm = in.n * std::exp(2.0 * (rng.uniform() - 0.5));
        const double a = loss_rank(in).value;
        const double b = loss_rank_alpha(in, alpha_star(in));
        if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(a))) return false;
    }
    return true;
}

bool prop_grid_min() {
    CounterRng rng(405, 0, 3);
    for (int t = 0; t < 200; ++t) {
        CriterionInput in;
        in.n = 30 + static_cast<int>(rng.uniform() * 300);
        in.rho = 0.1 + 0.6 * rng.uniform();
        in.df = 1 + static_cast<int>(rng.uniform() * 6);
        in.y_sq_norm = in.n * (0.5 + rng.uniform());
        const double closed = loss_rank(in).value;
        const double grid = loss_rank_grid_min(in);
        if (std::abs(closed - grid) > 1e-6 * std::max(1.0, std::abs(closed))) return false;
    }
    return true;
}

bool prop_kkt() {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        CounterRng size_rng(seed, 1, 6);
        const int n = 15 + static_cast<int>(size_rng.uniform() * 35);  // <= 50
        const int d = 3 + static_cast<int>(size_rng.uniform() * 9);    // <= 12
        auto sd = random_instance(n, d, seed, 0.0);
        auto path = compute_lars_path(sd);
        for (const auto& seg : path.segments) {
            for (const auto& [beta, lambda] :
                 {std::pair<const Eigen::VectorXd&, double>{seg.beta_hi, seg.lambda_hi},
                  std::pair<const Eigen::VectorXd&, double>{seg.beta_lo, seg.lambda_lo}}) {
                if (lambda <= 1e-8 * path.lambda_max) continue;
                Eigen::VectorXd corr = 2.0 * sd.Xs.transpose() * (sd.ys - sd.Xs * beta);
                // entering/leaving variables carry rounding-noise coefficients
                // at their own breakpoint; the inactive inequality covers them
                const double floor = 1e-10 * (1.0 + beta.lpNorm<Eigen::Infinity>());
                for (int j = 0; j < d; ++j) {
                    if (std::abs(beta(j)) > floor) {
                        const double want = lambda * (beta(j) > 0 ? 1.0 : -1.0);
                        if (std::abs(corr(j) - want) > 1e-6 * std::max(1.0, lambda)) return false;
                    } else if (std::abs(corr(j)) > lambda * (1.0 + 1e-7) + 1e-7) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool prop_path_vs_cd() {
    for (std::uint64_t seed = 60; seed < 110; ++seed) {
        auto sd = random_instance(25, 8, seed, 1.0);
        auto path = compute_lars_path(sd);
        CounterRng rng(seed, 2, 6);
        for (int k = 0; k < 5; ++k) {
            const double lambda = path.lambda_max * std::pow(10.0, -2.5 * rng.uniform());
            const double a = lasso_objective(sd, coefficients_at(path, lambda), lambda);
            const double b = lasso_objective(sd, lasso_fixed_lambda_cd(sd, lambda), lambda);
            if (std::abs(a - b) > 1e-6 * std::max(1.0, std::abs(b))) return false;
        }
    }
    return true;
}

bool prop_scaling_invariance() {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        auto sd = random_instance(40, 6, seed, 2.0);
        auto base = select_standardized(sd, {Criterion::LR});
        StandardizedDataset scaled = sd;
        scaled.ys *= 7.0;
        auto big = select_standardized(scaled, {Criterion::LR});
        if (base.chosen.at(Criterion::LR).subset != big.chosen.at(Criterion::LR).subset) {
            return false;
        }
    }
    return true;
}

bool prop_worker_determinism() {
    auto design = SimDesign::example1();
    design.sigma = 2.0;
    design.reps = 20;
    design.seed = 9;
    auto one = run_study(design, 1);
    auto eight = run_study(design, 8);
    for (auto c : {Criterion::LR, Criterion::BIC}) {
        const auto& a = one.per_criterion.at(c);
        const auto& b = eight.per_criterion.at(c);
        if (a.correct != b.correct || a.underfit != b.underfit || a.overfit != b.overfit ||
            a.avg_zeros != b.avg_zeros) {
            return false;
        }
    }
    return one.failures == eight.failures;
}

void criterion6() {
    struct Prop {
        const char* name;
        bool ok;
    };
    const Prop props[] = {
        {"closed-form identity (1000 inputs, 1e-10)", prop_closed_forms()},
        {"grid minimum matches closed form (200 inputs, 1e-6)", prop_grid_min()},
        {"KKT certificates on 50 random paths", prop_kkt()},
        {"path-vs-coordinate-descent objectives (50 x 5, 1e-6)", prop_path_vs_cd()},
        {"response-scaling invariance (30 instances)", prop_scaling_invariance()},
        {"worker-count determinism (20-rep study)", prop_worker_determinism()},
    };
    bool all = true;
    std::string detail;
    for (const auto& p : props) {
        all = all && p.ok;
        detail += std::string("       ") + (p.ok ? "ok  " : "FAIL") + " " + p.name + "\n";
    }
    report(6, "property suite", all, detail);
}

void criterion7() {
    std::string detail = "       LR correct rates:";
    double prev = -1.0;
    bool pass = true;
    for (int n : {50, 100, 200, 400}) {
        auto design = SimDesign::example1();
        design.n = n;
        design.sigma = 1.0;
        design.reps = 100;
        design.seed = 1;
        design.criteria = {Criterion::LR};
        auto tally = run_study(design, workers());
        const double rate = pct(tally.per_criterion.at(Criterion::LR).correct, 100);
        if (!tally.failures.empty()) pass = false;
        if (prev >= 0.0 && rate < prev - 5.0) pass = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, " n=%d: %.0f%%", n, rate);
        detail += buf;
        prev = rate;
    }
    detail += " (non-decreasing within 5pp)\n";
    report(7, "consistency trend in n", pass, detail);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    const auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/7 criteria passed (%.1f s)\n", 7 - g_failures, secs);
    return g_failures == 0 ? 0 : 1;
}
