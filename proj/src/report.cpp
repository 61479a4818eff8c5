#include "lrsel/report.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

namespace lrsel {

namespace {

std::string fmt6(double v) {
    std::ostringstream ss;
    ss << std::setprecision(6) << v;
    return ss.str();
}

nlohmann::json subset_json(const std::vector<int>& subset) {
    nlohmann::json arr = nlohmann::json::array();
    for (int j : subset) arr.push_back(j + 1);  // 1-based in external output
    return arr;
}

}  // namespace

std::string column_label(const std::vector<std::string>& names, int j) {
    if (j >= 0 && j < static_cast<int>(names.size())) return names[j];
    return "x" + std::to_string(j + 1);
}

std::string subset_label(const std::vector<std::string>& names, const std::vector<int>& subset) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) out += ",";
        out += column_label(names, subset[i]);
    }
    return out + "}";
}

std::string report_to_table(const SelectionReport& report) {
    std::ostringstream out;
    out << "candidates (lambda_max = " << fmt6(report.lambda_max) << "):\n";
    out << "  df  lambda_interval            ";
    for (const auto& [crit, score] : report.candidates.front().scores) {
        out << std::left << std::setw(14) << criterion_name(crit);
    }
    out << "subset\n";
    for (const auto& sc : report.candidates) {
        std::ostringstream interval;
        interval << "(" << fmt6(sc.model.lambda_lo) << ", " << fmt6(sc.model.lambda_hi) << "]";
        out << "  " << std::left << std::setw(4) << sc.model.df << std::setw(27)
            << interval.str();
        for (const auto& [crit, score] : sc.scores) {
            out << std::setw(14) << (score.feasible ? fmt6(score.value) : "inf");
        }
        out << subset_label(report.names, sc.model.subset) << "\n";
    }
    out << "\nchosen models:\n";
    for (const auto& [crit, chosen] : report.chosen) {
        out << "  " << std::left << std::setw(10) << criterion_name(crit)
            << subset_label(report.names, chosen.subset) << "  score = " << fmt6(chosen.score)
            << "  lambda in (" << fmt6(chosen.lambda_lo) << ", " << fmt6(chosen.lambda_hi)
            << "]\n";
        out << "            raw coefficients: intercept = " << fmt6(chosen.raw_intercept);
        for (std::size_t i = 0; i < chosen.subset.size(); ++i) {
            out << ", " << column_label(report.names, chosen.subset[i]) << " = "
                << fmt6(chosen.raw_coefficients(static_cast<int>(i)));
        }
        out << "\n";
    }
    return out.str();
}

std::string report_to_csv(const SelectionReport& report) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "record,criterion,df,lambda_lo,lambda_hi,value,subset\n";
    for (const auto& sc : report.candidates) {
        for (const auto& [crit, score] : sc.scores) {
            out << "candidate," << criterion_name(crit) << ',' << sc.model.df << ','
                << sc.model.lambda_lo << ',' << sc.model.lambda_hi << ','
                << (score.feasible ? std::to_string(score.value) : "inf") << ','
                << subset_label(report.names, sc.model.subset) << "\n";
        }
    }
    for (const auto& [crit, chosen] : report.chosen) {
        out << "chosen," << criterion_name(crit) << ',' << chosen.subset.size() << ','
            << chosen.lambda_lo << ',' << chosen.lambda_hi << ',' << chosen.score << ','
            << subset_label(report.names, chosen.subset) << "\n";
    }
    return out.str();
}

std::string report_to_json(const SelectionReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["lambda_max"] = report.lambda_max;
    j["excluded"] = {{"df_overflow", report.diagnostics.excluded_df_overflow},
                     {"rank_deficient", report.diagnostics.excluded_rank_deficient},
                     {"empty", report.diagnostics.excluded_empty}};
    j["candidates"] = nlohmann::json::array();
    for (const auto& sc : report.candidates) {
        nlohmann::json c;
        c["subset"] = subset_json(sc.model.subset);
        c["df"] = sc.model.df;
        c["lambda_lo"] = sc.model.lambda_lo;
        c["lambda_hi"] = sc.model.lambda_hi;
        c["rho"] = sc.model.fit.rho;
        c["sigma2_hat"] = sc.model.fit.sigma2_hat;
        for (const auto& [crit, score] : sc.scores) {
            if (score.feasible) {
                c["scores"][criterion_name(crit)] = score.value;
            } else {
                c["scores"][criterion_name(crit)] = "inf";
            }
        }
        j["candidates"].push_back(std::move(c));
    }
    for (const auto& [crit, chosen] : report.chosen) {
        nlohmann::json c;
        c["subset"] = subset_json(chosen.subset);
        nlohmann::json labels = nlohmann::json::array();
        for (int idx : chosen.subset) labels.push_back(column_label(report.names, idx));
        c["labels"] = labels;
        c["score"] = chosen.score;
        c["lambda_lo"] = chosen.lambda_lo;
        c["lambda_hi"] = chosen.lambda_hi;
        c["intercept"] = chosen.raw_intercept;
        nlohmann::json coefs = nlohmann::json::array();
        for (int i = 0; i < chosen.raw_coefficients.size(); ++i) {
            coefs.push_back(chosen.raw_coefficients(i));
        }
        c["raw_coefficients"] = coefs;
        j["chosen"][criterion_name(crit)] = std::move(c);
    }
    return j.dump(2) + "\n";
}

std::string path_to_table(const LassoPath& path, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "lambda_max = " << fmt6(path.lambda_max) << ", " << path.segments.size()
        << " segments\n";
    out << "lambda_hi     lambda_lo     |active|  active set\n";
    for (const auto& seg : path.segments) {
        out << std::left << std::setw(14) << fmt6(seg.lambda_hi) << std::setw(14)
            << fmt6(seg.lambda_lo) << std::setw(10) << seg.active.size()
            << subset_label(names, seg.active) << "\n";
    }
    return out.str();
}

std::string path_to_csv(const LassoPath& path) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "lambda_hi,lambda_lo,active_size,active\n";
    for (const auto& seg : path.segments) {
        out << seg.lambda_hi << ',' << seg.lambda_lo << ',' << seg.active.size() << ',';
        for (std::size_t i = 0; i < seg.active.size(); ++i) {
            out << (i ? ";" : "") << seg.active[i] + 1;
        }
        out << "\n";
    }
    return out.str();
}

std::string path_to_json(const LassoPath& path) {
    nlohmann::json j;
    j["lambda_max"] = path.lambda_max;
    j["n"] = path.n;
    j["d"] = path.d;
    j["segments"] = nlohmann::json::array();
    for (const auto& seg : path.segments) {
        j["segments"].push_back({{"lambda_hi", seg.lambda_hi},
                                 {"lambda_lo", seg.lambda_lo},
                                 {"active", subset_json(seg.active)}});
    }
    return j.dump(2) + "\n";
}

std::string criterion_curves_csv(const StandardizedDataset& data, const LassoPath& path,
                                 int grid_count) {
    const int n = data.n();
    const double ysq = data.ys.squaredNorm();
    const double lo = path.lambda_max * 1e-4;
    const int count = std::max(2, grid_count);
    const double step = std::log(path.lambda_max / lo) / (count - 1);

    std::map<std::vector<int>, std::pair<double, double>> subset_scores;  // (LR, BIC)
    std::ostringstream out;
    out << std::setprecision(17);
    out << "lambda,df,LR,BIC,GCV,BIC_TILDE\n";
    for (int g = count - 1; g >= 0; --g) {
        const double lambda = path.lambda_max * std::exp(-step * g);
        const Eigen::VectorXd beta = coefficients_at(path, lambda);
        std::vector<int> subset;
        for (int j = 0; j < path.d; ++j) {
            if (beta(j) != 0.0) subset.push_back(j);
        }
        out << lambda << ',' << subset.size() << ',';
        if (!subset.empty() && static_cast<int>(subset.size()) <= n - 1) {
            auto it = subset_scores.find(subset);
            if (it == subset_scores.end()) {
                try {
                    const OlsFit fit = ols_fit(data, subset);
                    const auto lr = score_subset_criterion(Criterion::LR, n, ysq, fit);
                    const auto b = score_subset_criterion(Criterion::BIC, n, ysq, fit);
                    it = subset_scores
                             .emplace(subset, std::make_pair(
                                                  lr.feasible ? lr.value : std::nan(""),
                                                  b.value))
                             .first;
                } catch (const Error&) {
                    it = subset_scores
                             .emplace(subset, std::make_pair(std::nan(""), std::nan("")))
                             .first;
                }
            }
            out << it->second.first << ',' << it->second.second << ',';
        } else {
            out << "nan,nan,";
        }
        try {
            out << gcv_lasso(data, beta, lambda);
        } catch (const Error&) {
            out << "nan";
        }
        out << ',';
        try {
            out << bic_tilde(data, beta, lambda);
        } catch (const Error&) {
            out << "nan";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace lrsel
