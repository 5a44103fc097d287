#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace tfmult::cli {

enum ExitCode : int { kSuccess = 0, kAssertionFailed = 1, kConfigError = 2 };

/// TFMULT_OUT when set, else the configured output, else tfmult_out/<name>.
std::filesystem::path output_directory(const ExperimentConfig& config);

int list_command(std::ostream& out);
int validate_command(const std::string& config_path, std::ostream& out, std::ostream& err);
int run_command(const std::string& config_path, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable and the tests.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfmult::cli
