// Grid-state breeding simulator command line.
//
// Subcommands: breed, sample, sweep, map3, wigner, oracle-check.
// Configuration comes from an optional flat key=value file (--config) with
// full override through flags. Exit codes: 0 success, 2 validation error,
// 1 runtime error.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

namespace {

using catbreed::cli::ConfigError;
using catbreed::cli::RunConfig;

struct FlagOverrides {
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<int> n_cats;
  std::optional<std::string> lattice;
  std::optional<double> squeezing_db;
  std::optional<double> eta;
  std::optional<std::string> parities;
  std::optional<std::string> outcomes;
  std::optional<bool> prescale;
  std::optional<int> samples;
  std::optional<std::string> per_sample_out;
  std::optional<int> cutoff;
  // sweep axes
  std::string n_list, squeezing_list, eta_list;
};

void add_common_flags(CLI::App* cmd, FlagOverrides& flags) {
  cmd->add_option("--config", flags.config_path, "flat key=value config file");
  cmd->add_option("--set", flags.sets, "override any config key as KEY=VALUE")
      ->take_all();
  cmd->add_option("--seed", flags.seed, "master seed");
  cmd->add_option("--workers", flags.workers, "worker thread count");
  cmd->add_option("--format", flags.format, "output format: csv or json");
  cmd->add_option("--out", flags.out, "output path (default stdout)");
  cmd->add_option("--n", flags.n_cats, "number of seed cats N");
  cmd->add_option("--lattice", flags.lattice,
                  "logical-square | qunaught | hex-logical | hex-qunaught");
  cmd->add_option("--squeezing-db", flags.squeezing_db, "cat squeezing in dB");
  cmd->add_option("--eta", flags.eta, "loss transmissivity on each cat");
  cmd->add_option("--parities", flags.parities, "comma list of cat parities, or 'even'");
  cmd->add_option("--outcomes", flags.outcomes,
                  "'zeros', 'sampled', or comma list of N-1 values");
  cmd->add_flag("--prescale,!--no-prescale", flags.prescale,
                "scale amplitudes by 1/sqrt(eta) before the loss");
  cmd->add_option("--samples", flags.samples, "Monte Carlo sample count");
  cmd->add_option("--per-sample-out", flags.per_sample_out, "per-sample table path");
  cmd->add_option("--cutoff", flags.cutoff, "number-basis cutoff for oracle checks");
}

RunConfig resolve_config(const FlagOverrides& flags) {
  RunConfig config;
  if (!flags.config_path.empty()) {
    for (const auto& [k, v] : catbreed::cli::parse_config_file(flags.config_path)) {
      catbreed::cli::apply_key_value(config, k, v);
    }
  }
  for (const auto& kv : flags.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--set expects KEY=VALUE, got '" + kv + "'");
    }
    catbreed::cli::apply_key_value(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (flags.seed) config.seed = *flags.seed;
  if (flags.workers) config.workers = *flags.workers;
  if (flags.format) config.format = *flags.format;
  if (flags.out) config.out = *flags.out;
  if (flags.n_cats) config.n_cats = *flags.n_cats;
  if (flags.lattice) config.lattice = catbreed::lattice_from_name(*flags.lattice);
  if (flags.squeezing_db) config.squeezing_db = *flags.squeezing_db;
  if (flags.eta) config.eta = *flags.eta;
  if (flags.parities) {
    config.parities = (*flags.parities == "even") ? std::vector<int>{}
                                                  : catbreed::cli::parse_int_list(*flags.parities);
  }
  if (flags.outcomes) config.outcomes = *flags.outcomes;
  if (flags.prescale) config.prescale = *flags.prescale;
  if (flags.samples) config.samples = *flags.samples;
  if (flags.per_sample_out) config.per_sample_out = *flags.per_sample_out;
  if (flags.cutoff) config.cutoff = *flags.cutoff;
  config.validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid-state preparation by squeezed-cat breeding"};
  app.require_subcommand(1);

  FlagOverrides flags;
  auto* breed_cmd = app.add_subcommand("breed", "one breeding run, metrics record");
  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo over homodyne outcomes");
  auto* sweep_cmd = app.add_subcommand("sweep", "grid over (N, squeezing, eta)");
  auto* map3_cmd = app.add_subcommand("map3", "Delta_p and density over (p1, p2)");
  auto* wigner_cmd = app.add_subcommand("wigner", "Wigner grid of the cat or bred state");
  auto* oracle_cmd = app.add_subcommand("oracle-check", "number-basis cross-validation");
  for (auto* cmd : {breed_cmd, sample_cmd, sweep_cmd, map3_cmd, wigner_cmd, oracle_cmd}) {
    add_common_flags(cmd, flags);
  }
  sweep_cmd->add_option("--n-list", flags.n_list, "comma list of N values");
  sweep_cmd->add_option("--squeezing-list", flags.squeezing_list,
                        "comma list of squeezing values (dB)");
  sweep_cmd->add_option("--eta-list", flags.eta_list, "comma list of eta values");
  map3_cmd->add_option("--map-resolution",
                       [&flags](const std::vector<std::string>& vals) {
                         flags.sets.push_back("map_resolution=" + vals.front());
                         return true;
                       },
                       "grid resolution per axis");
  wigner_cmd->add_option("--target",
                         [&flags](const std::vector<std::string>& vals) {
                           flags.sets.push_back("wigner_target=" + vals.front());
                           return true;
                         },
                         "cat | bred");
  wigner_cmd->add_option("--window",
                         [&flags](const std::vector<std::string>& vals) {
                           flags.sets.push_back("wigner_window=" + vals.front());
                           return true;
                         },
                         "half-width of the phase-space grid");
  wigner_cmd->add_option("--resolution",
                         [&flags](const std::vector<std::string>& vals) {
                           flags.sets.push_back("wigner_resolution=" + vals.front());
                           return true;
                         },
                         "points per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const RunConfig config = resolve_config(flags);
    if (breed_cmd->parsed()) {
      return catbreed::cli::cmd_breed(config);
    }
    if (sample_cmd->parsed()) {
      return catbreed::cli::cmd_sample(config);
    }
    if (sweep_cmd->parsed()) {
      return catbreed::cli::cmd_sweep(config, catbreed::cli::parse_int_list(flags.n_list),
                                      catbreed::cli::parse_double_list(flags.squeezing_list),
                                      catbreed::cli::parse_double_list(flags.eta_list));
    }
    if (map3_cmd->parsed()) {
      return catbreed::cli::cmd_map3(config);
    }
    if (wigner_cmd->parsed()) {
      return catbreed::cli::cmd_wigner(config);
    }
    if (oracle_cmd->parsed()) {
      return catbreed::cli::cmd_oracle_check(config);
    }
    std::fprintf(stderr, "no subcommand selected\n");
    return 2;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
