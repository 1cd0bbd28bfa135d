#pragma once

#include <string>
#include <vector>

namespace subdiff {

// Exit codes shared by all commands:
//   0 success, 1 configuration error, 2 solver failure, 3 verification failure.
int cmd_run(const std::string& config_path);
int cmd_sweep_alpha(const std::string& config_path, const std::vector<double>& alphas);
int cmd_verify();

}  // namespace subdiff
