#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace catbreed::cli {

std::string format_cell_csv(const Cell& cell) {
  if (std::holds_alternative<double>(cell)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", std::get<double>(cell));
    return buf;
  }
  if (std::holds_alternative<long long>(cell)) {
    return std::to_string(std::get<long long>(cell));
  }
  return std::get<std::string>(cell);
}

std::string render_table(const Table& table, const RunConfig& config,
                         const std::string& format) {
  if (format == "csv") {
    std::string out;
    out += "# catbreed " + std::string(kVersion) + "\n";
    out += "# command: " + table.command + "\n";
    out += "# config_hash: " + config.config_hash() + "\n";
    out += "# seed: " + std::to_string(config.seed) + "\n";
    for (const auto& [k, v] : config.canonical_items()) {
      out += "# cfg " + k + " = " + v + "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out += (i ? "," : "") + table.columns[i];
    }
    out += "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? "," : "") + format_cell_csv(row[i]);
      }
      out += "\n";
    }
    return out;
  }

  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["command"] = table.command;
  doc["config_hash"] = config.config_hash();
  doc["seed"] = config.seed;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : config.canonical_items()) {
    cfg[k] = v;
  }
  doc["config"] = cfg;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<double>(cell)) {
        r.push_back(std::get<double>(cell));
      } else if (std::holds_alternative<long long>(cell)) {
        r.push_back(std::get<long long>(cell));
      } else {
        r.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(r));
  }
  doc["records"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void write_table(const Table& table, const RunConfig& config, const std::string& path_override) {
  const std::string text = render_table(table, config, config.format);
  const std::string& path = path_override.empty() ? config.out : path_override;
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  out << text;
}

}  // namespace catbreed::cli
