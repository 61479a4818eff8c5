#pragma once

#include <string>

#include "lrsel/selector.hpp"

namespace lrsel {

/// Human-readable table: per-candidate scores plus one block per chosen
/// criterion. Numbers at 6 significant digits.
std::string report_to_table(const SelectionReport& report);

/// Machine formats carry full precision.
std::string report_to_csv(const SelectionReport& report);
std::string report_to_json(const SelectionReport& report);

/// Breakpoint listing of a path (lambda, active-set size, active set).
std::string path_to_table(const LassoPath& path, const std::vector<std::string>& names);
std::string path_to_csv(const LassoPath& path);
std::string path_to_json(const LassoPath& path);

/// Per-grid-point criterion traces (LR step values plus GCV / BIC-tilde
/// curves), CSV shaped for an external plotter.
std::string criterion_curves_csv(const StandardizedDataset& data, const LassoPath& path,
                                 int grid_count);

std::string column_label(const std::vector<std::string>& names, int j);
std::string subset_label(const std::vector<std::string>& names, const std::vector<int>& subset);

}  // namespace lrsel
