#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrsel/csv.hpp"
#include "lrsel/oracle.hpp"
#include "lrsel/report.hpp"
#include "lrsel/selector.hpp"
#include "lrsel/simbench.hpp"

#ifndef LRSEL_PROSTATE_CSV
#define LRSEL_PROSTATE_CSV "data/prostate.csv"
#endif

namespace {

using namespace lrsel;

std::set<Criterion> parse_criteria(const std::string& list) {
    std::set<Criterion> out;
    std::stringstream ss(list);
    std::string tag;
    while (std::getline(ss, tag, ',')) {
        if (!tag.empty()) out.insert(criterion_from_name(tag));
    }
    if (out.empty()) throw DomainError("empty criteria list");
    return out;
}

int run_select(const std::string& input, const std::string& response,
               const std::string& criteria, const std::string& output, double grid_min_factor,
               int grid_count) {
    const Dataset data = read_csv_dataset(input, response);
    SelectorOptions options;
    options.grid.min_factor = grid_min_factor;
    options.grid.count = grid_count;
    const SelectionReport report = select(data, parse_criteria(criteria), options);
    if (output == "json") {
        std::cout << report_to_json(report);
    } else if (output == "csv") {
        std::cout << report_to_csv(report);
    } else {
        std::cout << report_to_table(report);
    }
    return 0;
}

int run_path(const std::string& input, const std::string& response, const std::string& output,
             int curves) {
    const Dataset data = read_csv_dataset(input, response);
    const StandardizedDataset sdata = standardize(data);
    const LassoPath path = compute_lars_path(sdata);
    if (curves > 0) {
        std::cout << criterion_curves_csv(sdata, path, curves);
        return 0;
    }
    if (output == "json") {
        std::cout << path_to_json(path);
    } else if (output == "csv") {
        std::cout << path_to_csv(path);
    } else {
        std::cout << path_to_table(path, data.names);
    }
    return 0;
}

int run_simulate(SimDesign design, const std::string& beta_spec, int example, int n_flag,
                 int d_flag, const std::string& criteria, int workers,
                 const std::string& output) {
    if (example == 1) {
        design = SimDesign::example1();
    } else if (example == 2) {
        design = SimDesign::example2();
    }
    // flags given after a preset override the preset's fields
    if (n_flag > 0) design.n = n_flag;
    if (d_flag > 0) design.d = d_flag;
    if (!beta_spec.empty()) {
        std::vector<double> vals;
        std::stringstream ss(beta_spec);
        std::string cell;
        while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
        design.beta_true = Eigen::Map<Eigen::VectorXd>(vals.data(), vals.size());
        design.d = static_cast<int>(vals.size());
    }
    if (design.beta_true.size() != design.d) {
        throw DomainError("beta length does not match d; pass --beta or a preset");
    }
    design.criteria = parse_criteria(criteria);
    const MonteCarloTally tally = run_study(design, workers);
    if (output == "json") {
        std::cout << tally_to_json(tally, design);
    } else if (output == "csv") {
        std::cout << tally_to_csv(tally, design);
    } else {
        std::cout << tally_to_table(tally, design);
    }
    return tally.failures.empty() ? 0 : 3;
}

int run_demo_prostate(const std::string& path, const std::string& output) {
    const Dataset data = read_csv_dataset(path, "lpsa");
    const std::set<Criterion> all = {Criterion::LR, Criterion::BIC, Criterion::GCV,
                                     Criterion::BIC_TILDE};
    const SelectionReport report = select(data, all);
    if (output == "json") {
        std::cout << report_to_json(report);
    } else if (output == "csv") {
        std::cout << report_to_csv(report);
    } else {
        std::cout << report_to_table(report);
    }

    const StandardizedDataset sdata = standardize(data);
    const double n = sdata.n();
    std::cout << "\nBIC of the three competing models:\n";
    const std::vector<std::vector<int>> models = {
        {0, 1, 4}, {0, 1, 2, 3, 4, 7}, {0, 1, 2, 3, 4, 6, 7}};
    for (const auto& subset : models) {
        const OlsFit fit = ols_fit(sdata, subset);
        std::cout << "  BIC" << subset_label(data.names, subset) << " = "
                  << bic(static_cast<int>(n), fit.sigma2_hat, fit.df) << "\n";
    }

    const std::vector<int> want_lr = {0, 1, 4};
    const std::vector<int> want_gcv = {0, 1, 2, 3, 4, 6, 7};
    const std::vector<int> want_bt = {0, 1, 2, 3, 4, 7};
    bool ok = report.chosen.at(Criterion::LR).subset == want_lr &&
              report.chosen.at(Criterion::GCV).subset == want_gcv &&
              report.chosen.at(Criterion::BIC_TILDE).subset == want_bt;
    std::cout << (ok ? "\nmodel check: OK\n" : "\nmodel check: MISMATCH\n");
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lasso-path variable selection with the loss rank criterion"};
    app.require_subcommand(1);

    std::string input, response, output = "table";
    std::string criteria = "LR,BIC,GCV,BIC_TILDE";
    double grid_min_factor = 1e-4;
    int grid_count = 1000;

    auto* sel = app.add_subcommand("select", "select covariates from a CSV file");
    sel->add_option("--input", input, "input CSV with a header row")->required();
    sel->add_option("--response", response, "response column name (default: last column)");
    sel->add_option("--criteria", criteria, "comma list of LR,BIC,GCV,BIC_TILDE");
    sel->add_option("--output", output, "table | csv | json");
    sel->add_option("--grid-min-factor", grid_min_factor, "grid spans [lambda_max*f, lambda_max]");
    sel->add_option("--grid-count", grid_count, "lambda grid size for GCV / BIC_TILDE");

    int curves = 0;
    auto* pathcmd = app.add_subcommand("path", "print the lasso path breakpoints");
    pathcmd->add_option("--input", input, "input CSV with a header row")->required();
    pathcmd->add_option("--response", response, "response column name (default: last column)");
    pathcmd->add_option("--output", output, "table | csv | json");
    pathcmd->add_option("--curves", curves,
                        "emit per-grid-point criterion curves (CSV) with this many points");

    SimDesign design;
    int example = 0, n_flag = 0, d_flag = 0, workers = 1;
    std::string beta_spec;
    auto* sim = app.add_subcommand("simulate", "run a Monte Carlo study cell");
    sim->add_flag_function("--example1", [&](std::int64_t) { example = 1; },
                           "preset: beta=(3,1.5,0,0,2,0,0,0), corr 0.5");
    sim->add_flag_function("--example2", [&](std::int64_t) { example = 2; },
                           "preset: d=300, beta_30=...=beta_300=10, corr 0.5");
    sim->add_option("--n", n_flag, "sample size");
    sim->add_option("--d", d_flag, "number of covariates");
    sim->add_option("--beta", beta_spec, "comma list of true coefficients");
    sim->add_option("--sigma", design.sigma, "noise level");
    sim->add_option("--corr", design.corr, "AR(1) correlation parameter");
    sim->add_option("--reps", design.reps, "number of replications");
    sim->add_option("--seed", design.seed, "RNG seed");
    sim->add_option("--workers", workers, "parallel workers (result is worker-invariant)");
    sim->add_flag("--fixed-design", design.fixed_design, "draw X once instead of per rep");
    sim->add_option("--criteria", criteria, "comma list of LR,BIC,GCV,BIC_TILDE");
    sim->add_option("--output", output, "table | csv | json");

    std::string prostate_path = LRSEL_PROSTATE_CSV;
    auto* demo = app.add_subcommand("demo-prostate", "prostate cancer case study");
    demo->add_option("--data", prostate_path, "path to the bundled prostate CSV");
    demo->add_option("--output", output, "table | csv | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sel->parsed()) {
            return run_select(input, response, criteria, output, grid_min_factor, grid_count);
        }
        if (pathcmd->parsed()) {
            return run_path(input, response, output, curves);
        }
        if (sim->parsed()) {
            return run_simulate(design, beta_spec, example, n_flag, d_flag, criteria, workers,
                                output);
        }
        if (demo->parsed()) {
            return run_demo_prostate(prostate_path, output);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MissingDataFile& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonFiniteInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstantColumn& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
