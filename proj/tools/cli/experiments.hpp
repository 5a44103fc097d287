#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"

namespace tfmult::cli {

struct ExperimentResult {
  ResultTable table;
  std::string x_column;               // parameter plotted on the horizontal axis
  std::vector<std::string> y_columns{"measured", "predicted"};
  std::vector<std::string> failures;  // one message per failed assertion
};

using ExperimentRunner = std::function<ExperimentResult()>;

struct Experiment {
  std::string name;
  std::string summary;
  /// Checks every field of the configuration and returns the job to run.
  /// Throws tfmult::ParameterError or ConfigError on invalid input; never
  /// starts the computation itself.
  std::function<ExperimentRunner(const ExperimentConfig&)> prepare;
};

const std::vector<Experiment>& experiments();

/// Throws ConfigError for an unknown name.
const Experiment& find_experiment(const std::string& name);

}  // namespace tfmult::cli
