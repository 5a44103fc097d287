#include "cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "tfmult/verify.hpp"

namespace tfmult::cli {
namespace {

namespace pt = boost::property_tree;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"experiment", {"name", "seed", "output"}},
      {"grid", {"d", "L", "N", "stride"}},
      {"symbol", {"family", "alpha", "t", "r", "delta", "b"}},
      {"norm", {"p", "q"}},
      {"params", {}},
  };
  return keys;
}

double required_number(const pt::ptree& section, const std::string& key, double fallback) {
  const auto value = section.get_optional<std::string>(key);
  return value ? parse_number(*value) : fallback;
}

long long as_integer(double v, const std::string& key) {
  if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 9.0e15) {
    throw ConfigError(key + " must be an integer");
  }
  return static_cast<long long>(v);
}

}  // namespace

double parse_number(const std::string& text) {
  const std::string s = lower(trim(text));
  if (s == "inf" || s == "+inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + trim(text) + "'");
  }
  if (used != s.size()) throw ConfigError("not a number: '" + trim(text) + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  if (trim(body).empty()) return out;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_number(item));
  return out;
}

double ExperimentConfig::number(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : parse_number(it->second);
}

long long ExperimentConfig::integer(const std::string& key, long long fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : as_integer(parse_number(it->second), key);
}

std::vector<double> ExperimentConfig::list(const std::string& key,
                                           std::vector<double> fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : parse_list(it->second);
}

ExperimentConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }

  for (const auto& [section, body] : tree) {
    const auto known = known_keys().find(section);
    if (known == known_keys().end()) throw ConfigError("unknown section [" + section + "]");
    if (!body.data().empty()) throw ConfigError("key '" + section + "' outside any section");
    if (section == "params") continue;
    for (const auto& [key, value] : body) {
      if (!known->second.count(key)) throw ConfigError("unknown key '" + key + "' in [" + section + "]");
    }
  }

  ExperimentConfig config;
  const pt::ptree empty;
  const auto& experiment = tree.get_child("experiment", empty);
  config.name = trim(experiment.get<std::string>("name", ""));
  if (config.name.empty()) throw ConfigError("[experiment] name is required");
  config.seed = verify::kDefaultSeed;
  if (auto seed = experiment.get_optional<std::string>("seed")) {
    const std::string s = trim(*seed);
    try {
      std::size_t used = 0;
      config.seed = std::stoull(s, &used, 0);
      if (used != s.size()) throw ConfigError("");
    } catch (const std::exception&) {
      throw ConfigError("seed must be a non-negative integer");
    }
  }
  config.output = trim(experiment.get<std::string>("output", ""));

  const auto& grid = tree.get_child("grid", empty);
  config.grid.d = static_cast<int>(as_integer(required_number(grid, "d", config.grid.d), "d"));
  config.grid.L = required_number(grid, "L", config.grid.L);
  config.grid.N = as_integer(required_number(grid, "N", static_cast<double>(config.grid.N)), "N");
  config.grid.stride =
      as_integer(required_number(grid, "stride", static_cast<double>(config.grid.stride)), "stride");

  const auto& symbol = tree.get_child("symbol", empty);
  config.symbol.family = lower(trim(symbol.get<std::string>("family", "")));
  config.symbol.alpha = required_number(symbol, "alpha", config.symbol.alpha);
  config.symbol.t = required_number(symbol, "t", config.symbol.t);
  config.symbol.r = required_number(symbol, "r", config.symbol.r);
  config.symbol.delta = required_number(symbol, "delta", config.symbol.delta);
  config.symbol.b = required_number(symbol, "b", config.symbol.b);

  const auto& norm = tree.get_child("norm", empty);
  config.norm.p = required_number(norm, "p", config.norm.p);
  config.norm.q = required_number(norm, "q", config.norm.q);

  for (const auto& [key, value] : tree.get_child("params", empty)) {
    config.params[key] = trim(value.data());
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace tfmult::cli
