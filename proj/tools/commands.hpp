#pragma once

#include "run_config.hpp"

namespace catbreed::cli {

int cmd_breed(const RunConfig& config);
int cmd_sample(const RunConfig& config);
int cmd_sweep(const RunConfig& config, const std::vector<int>& n_list,
              const std::vector<double>& squeezing_list, const std::vector<double>& eta_list);
int cmd_map3(const RunConfig& config);
int cmd_wigner(const RunConfig& config);
int cmd_oracle_check(const RunConfig& config);

}  // namespace catbreed::cli
