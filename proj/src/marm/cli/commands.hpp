#pragma once

#include <string>

#include "marm/cli/config.hpp"

namespace marm {

// Runs every seed, writes one metrics CSV and the final machines per seed,
// then an aggregate CSV with mean and 95% confidence interval per
// evaluation point. Returns a process exit status.
int cmd_run(const RunConfig& cfg);

int cmd_inspect(const std::string& rm_file, const std::string& dot_out);

int cmd_oracle(const std::string& trace_file, int n_max);

}  // namespace marm
