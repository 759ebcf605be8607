#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"

namespace phonostat::cli {

struct ModelArgs {
    int n = 44;
    double beta = 0.8;
    std::vector<std::string> columns;  // empty means exact, approx and fluctuations
    std::string out_dir = "out";
};

// Each command returns the process exit code: 0 ok, 1 partial or runtime
// failure, 2 for usage problems (signalled by throwing ConfigError).
int cmd_model(const ModelArgs& args);
int cmd_profile(const RunConfig& config);
int cmd_fit(const RunConfig& config);
int cmd_distance(const RunConfig& config);
int cmd_cluster(const RunConfig& config);

}  // namespace phonostat::cli
