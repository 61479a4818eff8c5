#pragma once

#include <string>

#include "lrsel/linreg.hpp"

namespace lrsel {

/// Reads a numeric CSV with a header row into a Dataset. The response
/// column is selected by name, or defaults to the last column when the
/// name is empty. Throws ParseError with the offending cell location,
/// MissingDataFile when the path does not exist.
Dataset read_csv_dataset(const std::string& path, const std::string& response = "");

}  // namespace lrsel
