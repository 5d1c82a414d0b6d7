#pragma once

#include <string>
#include <vector>

#include "pcafactor/correlation.hpp"

namespace pcafactor {

// Named columns of raw observations read from a CSV file.
struct Dataset {
  std::vector<std::string> column_names;
  DataMatrix data;
  std::string source_path;
};

// Reads a comma-separated file (optional header row, quoted fields allowed,
// decimal point, UTF-8). Every data cell must parse as a finite number;
// empty cells are errors. Needs at least 2 rows and 2 columns. Without a
// header, columns are named c1..cm.
Dataset ingest_csv(const std::string& path, bool has_header);

// Same parser over an in-memory string; `origin` is reported in errors and
// stored as the source path.
Dataset parse_csv(const std::string& text, bool has_header,
                  const std::string& origin);

}  // namespace pcafactor
