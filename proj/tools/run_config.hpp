#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "catbreed/breeding.hpp"

namespace catbreed::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Configuration problems exit with status 2; runtime failures with 1.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Full run configuration: the breeding parameters plus command-specific
/// knobs. Every key can come from a flat key=value config file and be
/// overridden on the command line.
struct RunConfig {
  // breeding
  int n_cats = 2;
  Lattice lattice = Lattice::kQunaught;
  double squeezing_db = 12.0;
  double eta = 1.0;
  std::vector<int> parities;        // empty = all even
  std::string outcomes = "zeros";   // "zeros", "sampled", or comma list
  bool prescale = false;
  double hbar = 2.0;

  // harness
  std::uint64_t seed = 0;
  int samples = 0;
  int workers = 1;

  // map3
  double p1_min = -1.2, p1_max = 1.2;
  double p2_min = -1.2, p2_max = 1.2;
  int map_resolution = 41;

  // wigner
  double wigner_window = 12.0;
  int wigner_resolution = 101;
  std::string wigner_target = "bred";  // "cat" or "bred"

  // oracle
  int cutoff = 60;

  // output (runtime-only: excluded from the config hash)
  std::string out;
  std::string format = "csv";
  std::string per_sample_out;

  BreedingConfig breeding() const;
  void validate() const;

  /// Canonical sorted key=value lines of everything that affects results.
  std::vector<std::pair<std::string, std::string>> canonical_items() const;
  std::string config_hash() const;
};

/// Flat key=value file: one pair per line, '#' comments, blank lines ignored.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Applies a key=value pair; throws ConfigError on unknown keys or bad values.
void apply_key_value(RunConfig& config, const std::string& key, const std::string& value);

std::vector<double> parse_double_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace catbreed::cli
