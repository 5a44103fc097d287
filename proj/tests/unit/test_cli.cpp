#include <catch_amalgamated.hpp>

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cli/app.hpp"
#include "cli/config.hpp"
#include "cli/experiments.hpp"
#include "cli/report.hpp"

using namespace tfmult::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("tfmult_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_tool(std::initializer_list<std::string> args, std::string* out_text = nullptr,
             std::string* err_text = nullptr) {
  std::vector<std::string> argv{"tfmult"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = main_entry(argv, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

const char* kAmalgamT1 = R"([experiment]
name = amalgam_constants
output = OUT

[grid]
d = 1
L = 32
N = 1024
stride = 4

[params]
t_list = 1
)";

std::string with_output(std::string text, const fs::path& out) {
  text.replace(text.find("OUT"), 3, out.string());
  return text;
}

}  // namespace

TEST_CASE("number formatting uses 12 significant digits") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(std::pow(2.0, 0.25)) == "1.189207115");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(format_number(NAN) == "nan");
}

TEST_CASE("list parsing") {
  CHECK(parse_list("0.5, 1,2 ,4") == std::vector<double>{0.5, 1, 2, 4});
  CHECK(parse_list("[1, 2]") == std::vector<double>{1, 2});
  CHECK(parse_list("").empty());
  CHECK(std::isinf(parse_number("inf")));
  CHECK(std::isinf(parse_number(" Infinity ")));
  CHECK_THROWS_AS(parse_number("1.5x"), ConfigError);
  CHECK_THROWS_AS(parse_list("1,,2"), ConfigError);
}

TEST_CASE("configuration parsing") {
  const ExperimentConfig c = parse_config(R"(
[experiment]
name = schrodinger
seed = 42

[grid]
d = 1
L = 16
N = 256

[norm]
p = 1
q = inf

[params]
t_list = 0.5, 1
)");
  CHECK(c.name == "schrodinger");
  CHECK(c.seed == 42);
  CHECK(c.grid.L == 16.0);
  CHECK(c.grid.N == 256);
  CHECK(std::isinf(c.norm.q));
  CHECK(c.list("t_list", {}) == std::vector<double>{0.5, 1});
  CHECK(c.list("lambda_list", {3.0}) == std::vector<double>{3.0});

  CHECK_THROWS_AS(parse_config("[grid]\nd = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[experiment]\nname = x\n[grid]\nM = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[experiment]\nname = x\n[extra]\na = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[experiment]\nname = x\n[grid]\nN = 12.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[experiment\nname = x\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), ConfigError);
}

TEST_CASE("CSV emission") {
  ResultTable table;
  table.param_names = {"t"};
  SECTION("empty table gives a header-only file") {
    std::ostringstream out;
    emit_csv(table, out);
    CHECK(out.str() == "experiment,quantity,t,measured,predicted,relative_deviation,refinement,status\n");
  }
  SECTION("one row gives two lines") {
    ResultRow r;
    r.experiment = "e";
    r.quantity = "q";
    r.params = {0.5};
    r.measured = 1.1;
    r.predicted = 1.0;
    table.rows.push_back(r);
    std::ostringstream out;
    emit_csv(table, out);
    CHECK(count_lines(out.str()) == 2);
    CHECK(out.str().find("e,q,0.5,1.1,1,0.1,,pass\n") != std::string::npos);
  }
  SECTION("predicted and deviation are empty without a closed form") {
    ResultRow r;
    r.experiment = "e";
    r.quantity = "q";
    r.params = {1.0};
    r.measured = 2.0;
    r.refinement = 0.25;
    r.passed = false;
    table.rows.push_back(r);
    std::ostringstream out;
    emit_csv(table, out);
    CHECK(out.str().find("e,q,1,2,,,0.25,fail\n") != std::string::npos);
  }
  SECTION("row width must match the header") {
    ResultRow r;
    table.rows.push_back(r);
    std::ostringstream out;
    CHECK_THROWS(emit_csv(table, out));
  }
}

TEST_CASE("SVG emission") {
  ResultTable table;
  table.param_names = {"t"};
  SECTION("empty table draws axes only") {
    std::ostringstream out;
    emit_svg(table, "t", {"measured", "predicted"}, out);
    const std::string s = out.str();
    CHECK(s.rfind("<?xml", 0) == 0);
    CHECK(s.find("<svg") != std::string::npos);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(s.find("<line") != std::string::npos);
    CHECK(s.find("<polyline") == std::string::npos);
    CHECK(s.find("<circle") == std::string::npos);
  }
  SECTION("a single point is a marker") {
    ResultRow r;
    r.quantity = "w";
    r.params = {1.0};
    r.measured = 1.19;
    table.rows.push_back(r);
    std::ostringstream out;
    emit_svg(table, "t", {"measured"}, out);
    CHECK(out.str().find("<circle") != std::string::npos);
  }
  SECTION("measured and predicted give two curves") {
    for (double t : {0.5, 1.0, 2.0, 4.0}) {
      ResultRow r;
      r.quantity = "w";
      r.params = {t};
      r.measured = std::pow(1.0 + t * t, 0.25) * 1.001;
      r.predicted = std::pow(1.0 + t * t, 0.25);
      table.rows.push_back(r);
    }
    std::ostringstream out;
    emit_svg(table, "t", {"measured", "predicted"}, out);
    const std::string s = out.str();
    std::size_t curves = 0;
    for (auto pos = s.find("<polyline"); pos != std::string::npos; pos = s.find("<polyline", pos + 1)) ++curves;
    CHECK(curves == 2);
    CHECK(s.find("http") == s.find("http://www.w3.org/2000/svg"));
  }
}

TEST_CASE("experiment registry") {
  CHECK(experiments().size() >= 10);
  CHECK(find_experiment("chirp_stft").name == "chirp_stft");
  CHECK_THROWS_AS(find_experiment("nope"), ConfigError);
  std::string out;
  CHECK(run_tool({"list"}, &out) == kSuccess);
  for (const auto& e : experiments()) CHECK(out.find(e.name) != std::string::npos);
}

TEST_CASE("run writes artifacts with the closed-form prediction") {
  TempDir dir;
  const auto config = write_file(dir.path / "a.ini", with_output(kAmalgamT1, dir.path / "out"));
  std::string out, err;
  REQUIRE(run_tool({"run", config}, &out, &err) == kSuccess);
  const std::string csv = read_file(dir.path / "out" / "results.csv");
  CHECK(csv.find("amalgam_constants,w_fl1_linf,1,2048,8,1.18920711") != std::string::npos);
  CHECK(csv.find(",1.189207115,") != std::string::npos);
  CHECK(fs::exists(dir.path / "out" / "plot.svg"));

  SECTION("re-running gives byte-identical output") {
    REQUIRE(run_tool({"run", config}) == kSuccess);
    CHECK(read_file(dir.path / "out" / "results.csv") == csv);
  }
}

TEST_CASE("TFMULT_OUT overrides the output directory") {
  TempDir dir;
  const auto config = write_file(dir.path / "a.ini", with_output(kAmalgamT1, dir.path / "configured"));
  const fs::path override_dir = dir.path / "override";
  ::setenv("TFMULT_OUT", override_dir.c_str(), 1);
  const int code = run_tool({"run", config});
  ::unsetenv("TFMULT_OUT");
  CHECK(code == kSuccess);
  CHECK(fs::exists(override_dir / "results.csv"));
  CHECK_FALSE(fs::exists(dir.path / "configured"));
}

TEST_CASE("chirp STFT at t = 0 is exact to machine precision") {
  TempDir dir;
  const auto config = write_file(dir.path / "c.ini", "[experiment]\nname = chirp_stft\noutput = " +
                                                          (dir.path / "out").string() +
                                                          "\n[grid]\nL = 32\nN = 512\nstride = 8\n[params]\nt_list = 0\n");
  REQUIRE(run_tool({"run", config}) == kSuccess);
  const std::string csv = read_file(dir.path / "out" / "results.csv");
  const auto line = csv.substr(csv.find('\n') + 1);
  const double err = std::stod(line.substr(line.find("max_abs_error,0,") + 16));
  CHECK(err < 1e-13);
}

TEST_CASE("exit codes") {
  TempDir dir;
  SECTION("N = 255 is a parameter error") {
    std::string text = with_output(kAmalgamT1, dir.path / "out");
    text.replace(text.find("N = 1024"), 8, "N = 255");
    const auto config = write_file(dir.path / "bad.ini", text);
    std::string err;
    CHECK(run_tool({"run", config}, nullptr, &err) == kConfigError);
    CHECK(err.find("power of two") != std::string::npos);
    CHECK(run_tool({"validate", config}) == kConfigError);
    CHECK_FALSE(fs::exists(dir.path / "out"));
  }
  SECTION("an unreadable file is a configuration error") {
    std::string err;
    CHECK(run_tool({"run", (dir.path / "missing.ini").string()}, nullptr, &err) == kConfigError);
    CHECK(err.find("cannot read") != std::string::npos);
  }
  SECTION("an unknown experiment") {
    const auto config = write_file(dir.path / "u.ini", "[experiment]\nname = bogus\n");
    CHECK(run_tool({"validate", config}) == kConfigError);
  }
  SECTION("an unknown parameter") {
    const auto config = write_file(dir.path / "p.ini", "[experiment]\nname = chirp_stft\n[params]\nfoo = 1\n");
    CHECK(run_tool({"validate", config}) == kConfigError);
  }
  SECTION("a failed assertion exits with 1 and prints the row") {
    std::string text = with_output(kAmalgamT1, dir.path / "out");
    text += "tolerance = 1e-18\n";
    const auto config = write_file(dir.path / "strict.ini", text);
    std::string err;
    CHECK(run_tool({"run", config}, nullptr, &err) == kAssertionFailed);
    CHECK(err.find("FAILED row:") != std::string::npos);
    CHECK(fs::exists(dir.path / "out" / "results.csv"));
  }
  SECTION("usage errors") {
    CHECK(run_tool({}) == kConfigError);
    CHECK(run_tool({"frobnicate"}) == kConfigError);
    CHECK(run_tool({"run"}) == kConfigError);
  }
  SECTION("validate accepts a good file without running") {
    const auto config = write_file(dir.path / "a.ini", with_output(kAmalgamT1, dir.path / "out"));
    std::string out;
    CHECK(run_tool({"validate", config}, &out) == kSuccess);
    CHECK(out.find("ok") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.path / "out"));
  }
}

TEST_CASE("shipped configurations validate") {
  const char* dir = std::getenv("TFMULT_CONFIG_DIR");
  if (!dir) SKIP("TFMULT_CONFIG_DIR not set");
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".ini") continue;
    INFO(entry.path());
    CHECK(run_tool({"validate", entry.path().string()}) == kSuccess);
    ++n;
  }
  CHECK(n >= 10);
}
