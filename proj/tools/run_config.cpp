#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace catbreed::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("expected a boolean, got '" + v + "'");
}

double parse_double(const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& v) {
  try {
    std::size_t pos = 0;
    const int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("expected an integer, got '" + v + "'");
  }
}

std::uint64_t parse_u64(const std::string& v) {
  try {
    std::size_t pos = 0;
    const std::uint64_t u = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return u;
  } catch (const std::exception&) {
    throw ConfigError("expected an unsigned integer, got '" + v + "'");
  }
}

std::string format_double(double v) {
  // shortest representation that round-trips exactly
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      values.push_back(parse_double(item));
    }
  }
  return values;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      values.push_back(parse_int(item));
    }
  }
  return values;
}

BreedingConfig RunConfig::breeding() const {
  BreedingConfig c;
  c.n_cats = n_cats;
  c.lattice = lattice;
  c.squeezing_db = squeezing_db;
  c.eta = eta;
  c.parities = parities;
  c.hbar = hbar;
  c.prescale = prescale;
  if (outcomes == "sampled") {
    c.outcomes = OutcomePolicy::sampled(seed);
  } else if (outcomes == "zeros" || outcomes.empty()) {
    c.outcomes = OutcomePolicy::zeros(n_cats);
  } else {
    c.outcomes = {OutcomePolicy::Kind::kFixed, parse_double_list(outcomes), 0};
  }
  return c;
}

void RunConfig::validate() const {
  try {
    breeding().validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (samples < 0) throw ConfigError("samples must be >= 0");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (map_resolution < 2) throw ConfigError("map_resolution must be >= 2");
  if (wigner_resolution < 2) throw ConfigError("wigner_resolution must be >= 2");
  if (!(wigner_window > 0)) throw ConfigError("wigner_window must be > 0");
  if (wigner_target != "cat" && wigner_target != "bred") {
    throw ConfigError("wigner_target must be 'cat' or 'bred'");
  }
  if (format != "csv" && format != "json") {
    throw ConfigError("format must be 'csv' or 'json'");
  }
  if (cutoff < 2) throw ConfigError("cutoff must be >= 2");
  // equal bounds give a line scan at that fixed value
  if (!(p1_max >= p1_min) || !(p2_max >= p2_min)) {
    throw ConfigError("map ranges must satisfy max >= min");
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::canonical_items() const {
  std::vector<std::pair<std::string, std::string>> items = {
      {"cutoff", std::to_string(cutoff)},
      {"eta", format_double(eta)},
      {"hbar", format_double(hbar)},
      {"lattice", lattice_name(lattice)},
      {"map_resolution", std::to_string(map_resolution)},
      {"n_cats", std::to_string(n_cats)},
      {"outcomes", outcomes},
      {"p1_max", format_double(p1_max)},
      {"p1_min", format_double(p1_min)},
      {"p2_max", format_double(p2_max)},
      {"p2_min", format_double(p2_min)},
      {"parities", parities.empty() ? "even" : join_ints(parities)},
      {"prescale", prescale ? "true" : "false"},
      {"samples", std::to_string(samples)},
      {"seed", std::to_string(seed)},
      {"squeezing_db", format_double(squeezing_db)},
      {"wigner_resolution", std::to_string(wigner_resolution)},
      {"wigner_target", wigner_target},
      {"wigner_window", format_double(wigner_window)},
  };
  std::sort(items.begin(), items.end());
  return items;
}

std::string RunConfig::config_hash() const {
  // FNV-1a over the canonical key=value lines
  std::uint64_t h = 0xCBF29CE484222325ULL;
  const auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001B3ULL;
    }
  };
  for (const auto& [k, v] : canonical_items()) {
    mix(k);
    mix("=");
    mix(v);
    mix("\n");
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::map<std::string, std::string> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return entries;
}

void apply_key_value(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "n_cats") {
    config.n_cats = parse_int(value);
  } else if (key == "lattice") {
    try {
      config.lattice = lattice_from_name(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "squeezing_db") {
    config.squeezing_db = parse_double(value);
  } else if (key == "eta") {
    config.eta = parse_double(value);
  } else if (key == "parities") {
    config.parities = (value == "even") ? std::vector<int>{} : parse_int_list(value);
  } else if (key == "outcomes") {
    config.outcomes = value;
  } else if (key == "prescale") {
    config.prescale = parse_bool(value);
  } else if (key == "hbar") {
    config.hbar = parse_double(value);
  } else if (key == "seed") {
    config.seed = parse_u64(value);
  } else if (key == "samples") {
    config.samples = parse_int(value);
  } else if (key == "workers") {
    config.workers = parse_int(value);
  } else if (key == "p1_min") {
    config.p1_min = parse_double(value);
  } else if (key == "p1_max") {
    config.p1_max = parse_double(value);
  } else if (key == "p2_min") {
    config.p2_min = parse_double(value);
  } else if (key == "p2_max") {
    config.p2_max = parse_double(value);
  } else if (key == "map_resolution") {
    config.map_resolution = parse_int(value);
  } else if (key == "wigner_window") {
    config.wigner_window = parse_double(value);
  } else if (key == "wigner_resolution") {
    config.wigner_resolution = parse_int(value);
  } else if (key == "wigner_target") {
    config.wigner_target = value;
  } else if (key == "cutoff") {
    config.cutoff = parse_int(value);
  } else if (key == "out") {
    config.out = value;
  } else if (key == "format") {
    config.format = value;
  } else if (key == "per_sample_out") {
    config.per_sample_out = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

}  // namespace catbreed::cli
