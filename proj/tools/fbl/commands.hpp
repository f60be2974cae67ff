#pragma once

#include "fbl/config.hpp"

namespace fbl::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kConfigError = 2, kDivergence = 3 };

/// Runs the command named in the config, writes its outputs and returns the exit code.
int run(const RunConfig& config);

}  // namespace fbl::cli
