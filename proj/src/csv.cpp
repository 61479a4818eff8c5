#include "lrsel/csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace lrsel {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        const auto first = cell.find_first_not_of(" \t\r");
        const auto last = cell.find_last_not_of(" \t\r");
        cells.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

}  // namespace

Dataset read_csv_dataset(const std::string& path, const std::string& response) {
    std::ifstream in(path);
    if (!in) {
        throw MissingDataFile(path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(path, 1, "", "empty file");
    }
    const std::vector<std::string> header = split_row(line);
    const int ncols = static_cast<int>(header.size());
    if (ncols < 2) {
        throw ParseError(path, 1, "", "need at least two columns");
    }

    int ycol = ncols - 1;
    if (!response.empty()) {
        const auto it = std::find(header.begin(), header.end(), response);
        if (it == header.end()) {
            throw ParseError(path, 1, response, "response column not found in header");
        }
        ycol = static_cast<int>(it - header.begin());
    }

    std::vector<std::vector<double>> rows;
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split_row(line);
        if (static_cast<int>(cells.size()) != ncols) {
            throw ParseError(path, lineno, "",
                             "expected " + std::to_string(ncols) + " cells, got " +
                                 std::to_string(cells.size()));
        }
        std::vector<double> vals(ncols);
        for (int c = 0; c < ncols; ++c) {
            try {
                std::size_t used = 0;
                vals[c] = std::stod(cells[c], &used);
                if (used != cells[c].size()) throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                throw ParseError(path, lineno, header[c],
                                 "cannot parse '" + cells[c] + "' as a number");
            }
        }
        rows.push_back(std::move(vals));
    }

    const int n = static_cast<int>(rows.size());
    Dataset data;
    data.X.resize(n, ncols - 1);
    data.y.resize(n);
    for (int c = 0, out = 0; c < ncols; ++c) {
        if (c == ycol) continue;
        data.names.push_back(header[c]);
        for (int i = 0; i < n; ++i) data.X(i, out) = rows[i][c];
        ++out;
    }
    for (int i = 0; i < n; ++i) data.y(i) = rows[i][ycol];
    data.validate();
    return data;
}

}  // namespace lrsel
