#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "twp/cli/commands.hpp"
#include "twp/cli/config.hpp"
#include "twp/tightpoly/poly.hpp"

using namespace twp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "twp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  default_poly_cache().set_directory(std::nullopt);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("twp_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tau") {
  auto r = run({"--format", "json", "tau", "--genus", "2", "--indices", "4"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["value"] == "1/1152");
  r = run({"--format", "json", "tau", "--genus", "0", "--indices", "0,0,0"});
  CHECK(json_of(r)["value"] == "1");
  CHECK(json_of(r)["canonical"] == "1/1");
  r = run({"--format", "json", "tau", "-g", "2", "--indices", "1"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["value"] == "0");
  CHECK(json_of(r)["dimension_ok"] == false);
  r = run({"tau", "--genus", "2", "--indices", "4"});
  CHECK(r.out.find("1/1152") != std::string::npos);
}

TEST_CASE("poly") {
  auto r = run({"poly", "--g", "0", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("symmetric ✓ graded ✓") != std::string::npos);
  CHECK(r.out.find("-1") != std::string::npos);
  CHECK(r.out.find("1/2") != std::string::npos);
  r = run({"--format", "json", "poly", "--g", "0", "--n", "4"});
  const auto j = json_of(r);
  CHECK(j["terms"] == 5);
  CHECK(j["degree"] == 1);
  r = run({"--format", "csv", "poly", "--g", "1", "--n", "1"});
  CHECK(r.out.rfind("l_exponents,m_exponents,coefficient", 0) == 0);
}

TEST_CASE("moments") {
  const auto r = run({"--format", "csv", "moments", "--mu", "0"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,M_k");
  std::getline(in, line);
  CHECK(line.rfind("0,1.0000000000", 0) == 0);
  std::getline(in, line);
  CHECK(line.rfind("1,-1.973920880217871", 0) == 0);
}

TEST_CASE("cusps with a target") {
  const auto r = run({"--format", "json", "cusps", "--g", "4", "--target", "1000"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  const double mean = std::stod(j["mean"].get<std::string>());
  const double seed = std::stod(j["seed"].get<std::string>());
  const double mu_c = std::stod(j["mu_c"].get<std::string>());
  CHECK(mean == doctest::Approx(1000.0).epsilon(1e-8));
  CHECK(seed == doctest::Approx(mu_c * (1 - 5.0 * 4 / 2000)));
}

TEST_CASE("exit codes") {
  CHECK(run({"tau", "--genus", "-1", "--indices", "1"}).code == 2);
  CHECK(run({"poly", "--g", "0", "--n", "2"}).code == 2);
  CHECK(run({"--precision", "40", "moments", "--mu", "0"}).code == 2);
  CHECK(run({"--budget", "10", "moments", "--mu", "0"}).code == 2);
  CHECK(run({"--format", "xml", "moments", "--mu", "0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"moments", "--mu", "1"}).code == 2);
  CHECK(run({"spectrum", "--g", "4", "--beta", "2"}).code == 2);
  CHECK(run({"--budget", "10000", "poly", "--g", "5", "--n", "4"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tampered cache") {
  const auto dir = scratch("tamper");
  CHECK(run({"--cache-dir", dir.string(), "tau", "--genus", "3", "--indices", "2,2,2,2,1"}).code == 0);
  const auto file = dir / "tau.twp";
  REQUIRE(std::filesystem::exists(file));
  std::string text;
  {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  text[text.size() - 3] = text[text.size() - 3] == '1' ? '2' : '1';
  std::ofstream(file, std::ios::trunc) << text;
  const auto r = run({"--cache-dir", dir.string(), "tau", "--genus", "1", "--indices", "1"});
  CHECK(r.code == 4);
  CHECK(r.err.find("cache") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("determinism and warm cache") {
  const std::vector<std::string> sample = {"--format", "json", "--seed", "17", "sample",
                                           "--kind", "poisson", "--t-max", "3", "--runs", "500"};
  CHECK(run(sample).out == run(sample).out);
  const std::vector<std::string> cusps = {"--seed", "3", "sample", "--kind", "cusps",
                                          "--g", "3", "--mu-gap", "0.01", "--runs", "200"};
  CHECK(run(cusps).out == run(cusps).out);

  const auto dir = scratch("warm");
  const std::vector<std::string> vol = {"--cache-dir", dir.string(), "--format", "json", "volumes",
                                        "--g", "3", "--n", "2", "-L", "1,2", "--mu", "0.01"};
  const auto cold = run(vol);
  REQUIRE(cold.code == 0);
  CHECK(std::filesystem::exists(cell_path(dir, 3, 2)));
  CHECK(run(vol).out == cold.out);
  std::vector<std::string> nodir = vol;
  nodir.erase(nodir.begin(), nodir.begin() + 2);
  CHECK(run(nodir).out == cold.out);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
