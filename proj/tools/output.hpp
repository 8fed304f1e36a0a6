#pragma once

#include <string>
#include <variant>
#include <vector>

#include "run_config.hpp"

namespace catbreed::cli {

using Cell = std::variant<double, long long, std::string>;

/// One result table with the reproducibility header (version, config hash,
/// seed, resolved config). CSV cells are printed with 12 significant digits;
/// JSON carries the same values.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string render_table(const Table& table, const RunConfig& config,
                         const std::string& format);

/// Writes to config.out, or stdout when no path is set. `suffix_path`
/// overrides the destination (for secondary tables).
void write_table(const Table& table, const RunConfig& config,
                 const std::string& path_override = "");

std::string format_cell_csv(const Cell& cell);

}  // namespace catbreed::cli
