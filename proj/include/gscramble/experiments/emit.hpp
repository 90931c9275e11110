#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gscramble/types.hpp"

namespace gsc {

// One output series. CSV is the contract (deterministic bytes for a fixed
// config); SVG plots are a convenience rendering of the same columns.
struct ResultTable {
  std::string name;  // file stem
  std::vector<std::string> columns;
  std::vector<Vec> data;  // one vector per column, equal lengths
  std::vector<std::pair<std::string, std::string>> meta;  // '#' header lines
  bool log_x = false;
  bool log_y = false;

  int rows() const;
  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
};

// Writes <dir>/<name>.csv: '#' metadata lines, a header row, then rows with
// every value printed at 17 significant digits. Returns the file name.
std::string emit_csv(const ResultTable& table, const std::string& dir);

// Writes <dir>/<name>.svg: first column is x, every further column a line.
// Columns named std_error / sample_count are not plotted.
std::string emit_svg(const ResultTable& table, const std::string& dir);

// Writes <dir>/manifest.json listing produced files, config hash and code
// version.
void write_manifest(const std::string& dir, const std::string& experiment,
                    const std::string& config_hash,
                    const std::vector<std::string>& files);

// %.17g rendering used for all CSV numbers.
std::string format_value(double v);

}  // namespace gsc
