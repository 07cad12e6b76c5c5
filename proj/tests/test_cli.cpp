#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tridirac/cli.hpp"
#include "tridirac/errors.hpp"

namespace fs = std::filesystem;
using namespace tridirac;
using namespace tridirac::cli;

namespace {

fs::path fresh_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  fs::path p = fs::temp_directory_path() / ("tridirac_" + tag + "_" + std::to_string(rng()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

int run_main(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "tridirac");
  std::vector<char*> argv;
  for (auto& a : args) {
    argv.push_back(a.data());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = tridirac::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) {
    *out_text = out.str() + err.str();
  }
  return code;
}

}  // namespace

TEST_CASE("settings parse and reject bad input") {
  RunConfig c;
  apply_setting(c, "A", "3");
  apply_setting(c, "mu", "-2");
  apply_setting(c, "kappa", "1");
  apply_setting(c, "representation", "B");
  apply_setting(c, "seed", "42");
  CHECK(c.phys.A == 3.0);
  CHECK(c.phys.mu == -2.0);
  CHECK(c.phys.kappa == 1);
  CHECK(c.representation == Representation::B);
  CHECK(c.seed == 42u);
  CHECK_THROWS_AS(apply_setting(c, "nonsense", "1"), ParameterError);
  CHECK_THROWS_AS(apply_setting(c, "A", "three"), ParameterError);
  CHECK_THROWS_AS(apply_setting(c, "kappa", "1.5"), ParameterError);
  CHECK_THROWS_AS(apply_setting(c, "representation", "D"), ParameterError);
}

TEST_CASE("config file") {
  const fs::path dir = fresh_dir("cfg");
  {
    std::ofstream os(dir / "run.cfg");
    os << "# comment\nA = -1\nmu=2   # trailing\n\nkappa = 1\nN = 12\n";
  }
  RunConfig c;
  load_config_file(c, (dir / "run.cfg").string());
  CHECK(c.phys.A == -1.0);
  CHECK(c.phys.mu == 2.0);
  CHECK(c.N == 12);
  {
    std::ofstream os(dir / "bad.cfg");
    os << "A 3\n";
  }
  CHECK_THROWS_AS(load_config_file(c, (dir / "bad.cfg").string()), ParameterError);
  CHECK_THROWS_AS(load_config_file(c, (dir / "missing.cfg").string()), ParameterError);
  fs::remove_all(dir);
}

TEST_CASE("verify passes for the worked parameter set") {
  const fs::path dir = fresh_dir("verify");
  RunConfig c;
  c.mode = Mode::Verify;
  c.phys.A = 3.0;
  c.phys.mu = -2.0;
  c.phys.kappa = 1;
  c.N = 10;
  c.out = dir.string();
  const Report r = run(c);
  CHECK(r.all_pass());
  CHECK(fs::exists(dir / "report.json"));
  fs::remove_all(dir);
}

TEST_CASE("Dirac-Coulomb input is a configuration error") {
  const fs::path dir = fresh_dir("coulomb");
  std::string text;
  CHECK(run_main({"solve", "--A", "1", "--mu", "0", "--kappa", "1", "--out", dir.string()}, &text) == 2);
  CHECK(text.find("Coulomb") != std::string::npos);
  CHECK(run_main({"solve", "--bogus"}) == 2);
  CHECK(run_main({}) == 2);
  fs::remove_all(dir);
}

TEST_CASE("solve writes reproducible files") {
  const fs::path a = fresh_dir("solve_a");
  const fs::path b = fresh_dir("solve_b");
  const std::vector<std::string> common = {"solve", "--A", "-1", "--mu", "2", "--kappa", "1", "--N", "15", "--seed", "7"};
  auto with_out = [&](const fs::path& p) {
    auto args = common;
    args.push_back("--out");
    args.push_back(p.string());
    return args;
  };
  REQUIRE(run_main(with_out(a)) == 0);
  REQUIRE(run_main(with_out(b)) == 0);
  for (const char* name : {"wavefunction.csv", "coefficients.json", "report.json"}) {
    CAPTURE(name);
    CHECK(slurp(a / name) == slurp(b / name));
  }
  const std::string csv = slurp(a / "wavefunction.csv");
  CHECK(csv.rfind("r,phi_plus,phi_minus,residual_plus,residual_minus\n", 0) == 0);

  const auto coeffs = nlohmann::json::parse(slurp(a / "coefficients.json"));
  REQUIRE(coeffs.is_array());
  CHECK(coeffs.size() == 16);
  CHECK(coeffs[0].contains("n"));
  CHECK(coeffs[0].contains("f_n"));

  const auto report = nlohmann::json::parse(slurp(a / "report.json"));
  CHECK(report["config"]["seed"] == 7);
  CHECK(report["all_pass"] == true);
  CHECK(report["checks"].is_array());
  for (const auto& c : report["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("measured"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("pass"));
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("command-line values override the config file") {
  const fs::path dir = fresh_dir("override");
  {
    std::ofstream os(dir / "run.cfg");
    os << "A = 3\nmu = -2\nkappa = 1\nN = 40\n";
  }
  REQUIRE(run_main({"solve", "--config", (dir / "run.cfg").string(), "--N", "6", "--out", dir.string()}) == 0);
  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  CHECK(report["config"]["N"] == 6);
  CHECK(report["config"]["A"] == 3.0);
  fs::remove_all(dir);
}

TEST_CASE("special-case mode") {
  const fs::path dir = fresh_dir("special");
  REQUIRE(run_main({"special-case", "--A", "-1", "--mu", "2", "--kappa", "1", "--out", dir.string()}) == 0);
  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  CHECK(report.contains("earlier_parametrization"));
  CHECK(std::abs(report["earlier_parametrization"]["nu"].get<double>() + 1.5) < 1e-12);
  fs::remove_all(dir);
}

#ifdef TRIDIRAC_TOOL
TEST_CASE("installed tool runs") {
  const fs::path dir = fresh_dir("tool");
  const std::string cmd = std::string(TRIDIRAC_TOOL) + " verify --A 3 --mu -2 --kappa 1 --N 8 --out " + dir.string() +
                          " > " + (dir / "log.txt").string() + " 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(dir / "log.txt").find("PASS") != std::string::npos);
  fs::remove_all(dir);
}
#endif
