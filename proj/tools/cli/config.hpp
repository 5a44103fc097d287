#pragma once

// Experiment configuration files: INI-style sections of key = value pairs,
// one experiment per file, lists written as comma-separated values.
//
//   [experiment]  name, seed, output
//   [grid]        d, L, N, stride
//   [symbol]      family, alpha, t, r, delta, b
//   [norm]        p, q            ("inf" is accepted)
//   [params]      t_list, lambda_list, alpha_list, count, tolerance, ...

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfmult::cli {

/// Raised for unreadable or malformed configuration files.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  int d = 1;
  double L = 32.0;
  long long N = 1024;
  long long stride = 1;
};

struct SymbolSpec {
  std::string family;  // empty when the experiment takes no symbol
  double alpha = 2.0;
  double t = 1.0;
  double r = 1.0;
  double delta = 1.0;
  double b = 1.0;
};

struct NormSpec {
  double p = 2.0;
  double q = 2.0;
};

struct ExperimentConfig {
  std::string name;
  std::uint64_t seed = 0;
  std::string output;  // empty: default directory
  GridSpec grid;
  SymbolSpec symbol;
  NormSpec norm;
  std::map<std::string, std::string> params;  // raw [params] entries

  bool has(const std::string& key) const { return params.count(key) != 0; }
  double number(const std::string& key, double fallback) const;
  long long integer(const std::string& key, long long fallback) const;
  std::vector<double> list(const std::string& key, std::vector<double> fallback) const;
};

/// Parses a number, accepting "inf" and "infinity" in any case.
double parse_number(const std::string& text);
std::vector<double> parse_list(const std::string& text);

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace tfmult::cli
