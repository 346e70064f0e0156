#pragma once

#include <string>
#include <vector>

namespace steiner {

struct TableGrid {
  std::vector<int> n_values;       // terminal counts for the n-indexed bounds
  std::vector<int> k_values;       // family indices for the k-indexed bounds
  std::vector<double> eps_values;  // radians

  static TableGrid default_grid();
};

// One CSV row per (formula, parameters): value empty when the parameters
// fall outside the formula's range.  Output is byte-stable for a fixed grid.
std::string bound_table_csv(const TableGrid& grid);

// Numeric study of the edge-collapse polynomials' roots nearest 1: one row
// per (kind, k, h) with the located distance and its k^2-scaled value.
std::string root_probe_csv(int k_max);

}  // namespace steiner
