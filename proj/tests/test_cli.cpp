// Copyright 2026 The latcheck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "latcheck/cli.hpp"

using namespace latcheck;
namespace fs = std::filesystem;

namespace {

// Runs the CLI in-process with stdout/stderr captured.
struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  RunResult res;
  try {
    res.code = cli::run(args);
  } catch (...) {
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    throw;
  }
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path temp_file(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "latcheck-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("gen writes a reproducible instance array") {
  fs::path a = temp_file("gen-a.json");
  fs::path b = temp_file("gen-b.json");
  std::vector<std::string> args{"gen",     "--dim",  "3", "--degree", "2",
                                "--kind",  "oa",     "--count", "5", "--seed", "7",
                                "--out",   a.string()};
  REQUIRE(run_cli(args).code == 0);
  args.back() = b.string();
  REQUIRE(run_cli(args).code == 0);
  CHECK(slurp(a) == slurp(b));

  nlohmann::json j = nlohmann::json::parse(slurp(a));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 5);
  for (const auto& inst : j) {
    CHECK(inst["spec"]["d"] == 3);
    CHECK(inst["spec"]["n"] == 2);
    CHECK(inst["spec"]["m"] == 1);
    CHECK(inst["spec"]["kind"] == "oa");
  }

  fs::path c = temp_file("gen-c.json");
  std::vector<std::string> other{"gen",    "--dim", "3", "--degree", "2",
                                 "--kind", "oa",    "--count", "5", "--seed", "8",
                                 "--out",  c.string()};
  REQUIRE(run_cli(other).code == 0);
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("gen supports order-1 instances with default settings") {
  fs::path p = temp_file("gen-n1.json");
  RunResult r = run_cli({"gen", "--degree", "1", "--out", p.string()});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(p));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["spec"]["n"] == 1);
  for (const auto& row : j[0]["tensor"]) CHECK(row["index"].size() == 1);
}

TEST_CASE("check accepts its own gen output") {
  fs::path inst = temp_file("roundtrip-inst.json");
  fs::path rep = temp_file("roundtrip-rep.json");
  REQUIRE(run_cli({"gen", "--dim", "2", "--dim", "3", "--degree", "2", "--degree", "3",
                   "--kind", "oa", "--kind", "perturbed", "--count", "2", "--seed", "21",
                   "--out", inst.string()})
              .code == 0);
  RunResult r = run_cli({"check", inst.string(), "--out", rep.string()});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(rep));
  CHECK(j["header"]["prng"] == "mt19937_64");
  CHECK(j["header"]["library_version"] == kVersion);
  REQUIRE(j["reports"].size() == 16);
  for (const auto& report : j["reports"]) {
    CHECK(report["agree"] == true);
    CHECK(report["expected_ok"] == true);
    if (report["kind"] == "perturbed") CHECK(report["verdicts"]["i"] == false);
    if (report["kind"] == "oa") CHECK(report["verdicts"]["i"] == true);
  }
}

TEST_CASE("check fails when labeled expectations do not hold") {
  fs::path inst = temp_file("mislabel-inst.json");
  fs::path rep = temp_file("mislabel-rep.json");
  REQUIRE(run_cli({"gen", "--dim", "3", "--degree", "2", "--kind", "oa", "--seed", "5",
                   "--out", inst.string()})
              .code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(inst));
  // A diagonal tensor claiming to be perturbed passes every condition, so
  // the expected-failure contract is violated.
  j[0]["spec"]["kind"] = "perturbed";
  j[0]["spec"]["epsilon"] = 0.5;
  std::ofstream(inst, std::ios::binary) << j.dump(2);
  RunResult r = run_cli({"check", inst.string(), "--out", rep.string()});
  CHECK(r.code == 1);
  nlohmann::json reports = nlohmann::json::parse(slurp(rep));
  CHECK(reports["reports"][0]["agree"] == true);
  CHECK(reports["reports"][0]["expected_ok"] == false);
}

TEST_CASE("check rejects malformed input naming the offending record") {
  fs::path bad = temp_file("bad-inst.json");
  std::ofstream(bad, std::ios::binary) << "this is not json";
  RunResult r = run_cli({"check", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("not valid JSON") != std::string::npos);

  std::ofstream(bad, std::ios::binary)
      << R"([{"spec": {"d": 2, "n": 2, "m": 1, "kind": "oa", "epsilon": 0, "seed": 1},)"
      << R"( "tensor": [{"index": [1], "value": ["1"]}]}])";
  r = run_cli({"check", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("instance[0]") != std::string::npos);
  CHECK(r.err.find("index length") != std::string::npos);

  r = run_cli({"check", temp_file("does-not-exist.json").string()});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors exit with code 2 and help with 0") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"gen", "--no-such-flag"}).code == 2);
  CHECK(run_cli({"gen", "--count", "0"}).code == 2);
  CHECK(run_cli({"check"}).code == 2);
  CHECK(run_cli({"suite", "--format", "yaml"}).code == 2);
  CHECK(run_cli({"suite", "--r-values", "7"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"gen", "--help"}).code == 0);
  // Structurally impossible grid cell: perturbed needs d >= 2.
  CHECK(run_cli({"gen", "--dim", "1", "--kind", "perturbed"}).code == 2);
}

TEST_CASE("environment seed overrides the flag") {
  fs::path flag17 = temp_file("env-flag17.json");
  fs::path env17 = temp_file("env-env17.json");
  fs::path flag42 = temp_file("env-flag42.json");
  REQUIRE(run_cli({"gen", "--seed", "17", "--out", flag17.string()}).code == 0);
  REQUIRE(run_cli({"gen", "--seed", "42", "--out", flag42.string()}).code == 0);
  ::setenv("LATCHECK_SEED", "17", 1);
  RunResult r = run_cli({"gen", "--seed", "42", "--out", env17.string()});
  ::unsetenv("LATCHECK_SEED");
  REQUIRE(r.code == 0);
  CHECK(slurp(env17) == slurp(flag17));
  CHECK(slurp(env17) != slurp(flag42));

  ::setenv("LATCHECK_SEED", "not-a-number", 1);
  RunResult bad = run_cli({"gen"});
  ::unsetenv("LATCHECK_SEED");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("LATCHECK_SEED") != std::string::npos);
}

TEST_CASE("csv reports carry one row per instance") {
  fs::path inst = temp_file("csv-inst.json");
  fs::path rep = temp_file("csv-rep.csv");
  REQUIRE(run_cli({"gen", "--dim", "2", "--degree", "2", "--count", "3", "--seed", "3",
                   "--out", inst.string()})
              .code == 0);
  REQUIRE(run_cli({"check", inst.string(), "--format", "csv", "--out", rep.string()})
              .code == 0);
  std::istringstream is(slurp(rep));
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line.rfind("id,kind,n,d,m,epsilon,seed", 0) == 0);
  int rows = 0;
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("suite is deterministic and parallel-safe") {
  fs::path a = temp_file("suite-a.json");
  fs::path b = temp_file("suite-b.json");
  std::vector<std::string> base{"suite", "--dim", "2", "--dim", "3", "--degree", "2",
                                "--degree", "3", "--count", "1", "--seed", "11"};
  std::vector<std::string> run1 = base;
  run1.insert(run1.end(), {"--jobs", "1", "--out", a.string()});
  std::vector<std::string> run4 = base;
  run4.insert(run4.end(), {"--jobs", "4", "--out", b.string()});
  RunResult r1 = run_cli(run1);
  RunResult r4 = run_cli(run4);
  REQUIRE(r1.code == 0);
  REQUIRE(r4.code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(r1.out.find("suite: pass") != std::string::npos);
  nlohmann::json j = nlohmann::json::parse(slurp(a));
  CHECK(j["all_pass"] == true);
  CHECK(j["identities"].size() == 4);
}

TEST_CASE("suite with zero tolerance reports root-bearing identity failures") {
  fs::path out = temp_file("suite-tol0.json");
  RunResult r = run_cli({"suite", "--dim", "2", "--degree", "2", "--kind", "random",
                         "--count", "1", "--tol", "0", "--out", out.string()});
  CHECK(r.code == 1);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  bool modulus_failed = false;
  bool binomial_passed = false;
  for (const auto& idj : j["identities"]) {
    if (idj["name"] == "modulus-expansion-even") modulus_failed = idj["pass"] == false;
    if (idj["name"] == "odd-binomial-identity") binomial_passed = idj["pass"] == true;
  }
  CHECK(modulus_failed);
  CHECK(binomial_passed);
}
