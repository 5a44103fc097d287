#include "cli/app.hpp"

#include <cstdlib>
#include <exception>
#include <iomanip>

#include <CLI11.hpp>

#include "cli/experiments.hpp"
#include "tfmult/core.hpp"

namespace tfmult::cli {
namespace {

struct Prepared {
  ExperimentConfig config;
  ExperimentRunner runner;
};

Prepared prepare(const std::string& path) {
  ExperimentConfig config = load_config(path);
  const Experiment& experiment = find_experiment(config.name);
  ExperimentRunner runner = experiment.prepare(config);
  return {std::move(config), std::move(runner)};
}

// Runs `body`, mapping configuration and parameter errors to exit code 2.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
  } catch (const GridMismatch& e) {
    err << "parameter error: " << e.what() << '\n';
  }
  return kConfigError;
}

}  // namespace

std::filesystem::path output_directory(const ExperimentConfig& config) {
  if (const char* env = std::getenv("TFMULT_OUT"); env && *env) return env;
  if (!config.output.empty()) return config.output;
  return std::filesystem::path("tfmult_out") / config.name;
}

int list_command(std::ostream& out) {
  std::size_t width = 0;
  for (const auto& e : experiments()) width = std::max(width, e.name.size());
  for (const auto& e : experiments()) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << e.name << e.summary << '\n';
  }
  return kSuccess;
}

int validate_command(const std::string& config_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Prepared p = prepare(config_path);
    out << config_path << ": ok (" << p.config.name << ")\n";
    return kSuccess;
  });
}

int run_command(const std::string& config_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Prepared p = prepare(config_path);
    const ExperimentResult result = p.runner();

    const auto dir = output_directory(p.config);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
    emit_csv(result.table, (dir / "results.csv").string());
    emit_svg(result.table, result.x_column, result.y_columns, (dir / "plot.svg").string());

    out << p.config.name << ": " << result.table.rows.size() << " rows -> " << dir.string() << '\n';
    if (result.failures.empty()) return kSuccess;
    const auto header = csv_header(result.table);
    for (const auto& row : result.table.rows) {
      if (row.passed) continue;
      const auto fields = csv_fields(result.table, row);
      err << "FAILED row:";
      for (std::size_t i = 0; i < fields.size(); ++i) err << ' ' << header[i] << '=' << fields[i];
      err << '\n';
    }
    for (const auto& f : result.failures) err << "assertion failed: " << f << '\n';
    return kAssertionFailed;
  });
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tfmult: time-frequency analysis of Fourier multipliers"};
  app.require_subcommand(1);
  std::string config_path;
  auto* run = app.add_subcommand("run", "run the experiment described by a configuration file");
  run->add_option("config", config_path, "configuration file")->required();
  auto* list = app.add_subcommand("list", "list the available experiments");
  auto* validate = app.add_subcommand("validate", "check a configuration file without running it");
  validate->add_option("config", config_path, "configuration file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kConfigError;
  }

  try {
    if (*list) return list_command(out);
    if (*validate) return validate_command(config_path, out, err);
    return run_command(config_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace tfmult::cli
