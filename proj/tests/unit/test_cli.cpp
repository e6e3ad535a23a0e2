// Copyright 2026 The evcopula Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "evcopula/cli.hpp"
#include "evcopula/io.hpp"
#include "evcopula/measures.hpp"

namespace evc {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "evcopula");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path TempDir() {
  const fs::path dir = fs::temp_directory_path() / "evcopula_test_cli";
  fs::create_directories(dir);
  return dir;
}

std::string WriteFile(const std::string& name, const std::string& text) {
  const fs::path p = TempDir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST_CASE("validate") {
  const std::string good =
      WriteFile("good.json", R"({"vertices": [[0.6, 0.7], [0.3, 0.8]]})");
  const Result ok = RunCli({"validate", good});
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["valid"] == true);
  CHECK(j["vertices"].size() == 2);
  CHECK(j["vertices"][0][0] == 0.3);

  const Result bad = RunCli({"validate", R"({"vertices": [[0.5, 0.4]]})"});
  CHECK(bad.code == 2);
  const json e = json::parse(bad.out);
  CHECK(e["valid"] == false);
  CHECK(e["error"] == "EnvelopeViolation");

  CHECK(RunCli({"validate", R"({"vertices": [[0.3, 0.95], [0.6, 0.75]]})"})
            .code == 2);
  CHECK(RunCli({"validate", "{not json"}).code == 1);
  CHECK(RunCli({"validate", R"({"points": []})"}).code == 1);
  CHECK(RunCli({"validate", (TempDir() / "missing.json").string()}).code == 1);
}

TEST_CASE("round trip through validate") {
  const Result a = RunCli({"triangular", "--x1", "0.3", "--y1", "0.85"});
  REQUIRE(a.code == 0);
  const json fn = json::parse(a.out)["function"];
  const Result b = RunCli({"validate", fn.dump()});
  CHECK(b.code == 0);
  CHECK(json::parse(b.out)["vertices"] == fn["vertices"]);
}

TEST_CASE("measures") {
  const Result empty = RunCli({"measures", R"({"vertices": []})"});
  CHECK(empty.code == 0);
  const json j = json::parse(empty.out);
  CHECK(j["tau"] == 0.0);
  CHECK(std::abs(j["rho"].get<double>()) < 1e-15);
  CHECK(j["resolution"] == "exact");

  const Result two =
      RunCli({"measures", R"({"vertices": [[0.3, 0.8], [0.6, 0.7]]})"});
  const json k = json::parse(two.out);
  CHECK(k["tau"].get<double>() == doctest::Approx(257.0 / 560.0));
  CHECK(k["rho"].get<double>() == doctest::Approx(10.0 / 17.0));

  const Result g =
      RunCli({"measures", "--family", "gumbel", "--param", "2", "--tol", "1e-9"});
  CHECK(g.code == 0);
  const json gj = json::parse(g.out);
  CHECK(gj["tau"].get<double>() == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(gj["resolution"].is_number_integer());

  CHECK(RunCli({"measures"}).code == 1);
  CHECK(RunCli({"measures", "--family", "frank", "--param", "2"}).code == 1);
  CHECK(RunCli({"measures", "--family", "gumbel", "--param", "0.5"}).code == 2);
}

TEST_CASE("bounds and triangular") {
  const Result b = RunCli({"bounds", R"({"vertices": [[0.5, 0.75]]})"});
  CHECK(b.code == 0);
  const json j = json::parse(b.out);
  CHECK(j["verdict"] == true);
  CHECK(std::abs(j["slack_sharp"].get<double>()) < 1e-12);
  CHECK(j["sharp_lower"].get<double>() == doctest::Approx(3.0 / 7.0));
  CHECK(j.contains("slack_hl"));

  const Result t = RunCli({"triangular", "--x1", "0.5", "--y1", "0.75"});
  CHECK(t.code == 0);
  const json tj = json::parse(t.out);
  CHECK(tj["tau"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(tj["rho"].get<double>() == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
  CHECK(std::abs(tj["slack_sharp"].get<double>()) < 1e-12);
  CHECK(RunCli({"triangular", "--x1", "0.5", "--y1", "0.3"}).code == 2);
  CHECK(RunCli({"triangular", "--x1", "0.5"}).code == 1);
}

TEST_CASE("lemmas") {
  const Result r = RunCli({"lemmas", "--trials", "500", "--seed", "4"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["trials"] == 500);
  CHECK(RunCli({"lemmas", "--trials", "10"}).code == 1);
}

TEST_CASE("region") {
  const std::string path = (TempDir() / "region.csv").string();
  const Result r = RunCli({"region", "--count", "300", "--max-vertices", "8",
                           "--seed", "2", "--workers", "3", "--out", path});
  CHECK(r.code == 0);
  const json summary = json::parse(r.out);
  CHECK(summary["count"] == 300);
  CHECK(summary["violations"] == 0);
  const std::string csv = ReadFile(path);
  CHECK(csv.rfind("tau,rho,slack_sharp,slack_hl\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 301);

  const Result stdout_run = RunCli({"region", "--count", "300",
                                    "--max-vertices", "8", "--seed", "2"});
  CHECK(stdout_run.out == csv);
  CHECK(RunCli({"region", "--count", "10"}).code == 1);
}

TEST_CASE("sample") {
  const std::string fn = WriteFile("fn.json", R"({"vertices": [[0.5, 0.75]]})");
  const Result a = RunCli({"sample", fn, "--n", "1000", "--seed", "8"});
  const Result b =
      RunCli({"sample", fn, "--n", "1000", "--seed", "8", "--workers", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("u,v\n", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1001);
  const Result bare =
      RunCli({"sample", fn, "--n", "1000", "--seed", "8", "--no-header"});
  CHECK(bare.out == a.out.substr(4));
  const Result other = RunCli({"sample", fn, "--n", "1000", "--seed", "9"});
  CHECK(other.out != a.out);
  CHECK(RunCli({"sample", fn, "--n", "10"}).code == 1);
}

TEST_CASE("figure data agrees with the bound curves") {
  const Result r = RunCli({"figure-data"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "tau,hl_lower,hl_upper,sharp_lower,triangular_tau,triangular_rho");
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<double> v;
    std::string cell;
    while (std::getline(fields, cell, ',')) v.push_back(std::stod(cell));
    REQUIRE(v.size() == 6);
    const BoundCurves c = ComputeBoundCurves(v[0]);
    CHECK(std::abs(v[1] - c.hl_lower) < 1e-12);
    CHECK(std::abs(v[2] - c.hl_upper) < 1e-12);
    CHECK(std::abs(v[3] - c.sharp_lower) < 1e-12);
    CHECK(std::abs(v[4] - v[0]) < 1e-12);
    CHECK(std::abs(v[5] - v[3]) < 1e-12);
    ++rows;
  }
  CHECK(rows == 1001);
  const Result help = RunCli({"figure-data", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("not emitted") != std::string::npos);
}

TEST_CASE("gap") {
  const Result r = RunCli({"gap"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["argmax"].get<double>() - (std::sqrt(6.0) - 2.0)) < 1e-6);
  CHECK(std::abs(j["max"].get<double>() - (5.0 - 2.0 * std::sqrt(6.0))) <
        1e-9);
}

TEST_CASE("subcommand selection") {
  CHECK(RunCli({}).code == 1);
  CHECK(RunCli({"frobnicate"}).code == 1);
  CHECK(RunCli({"gap", "--bogus"}).code == 1);
  CHECK(RunCli({"--help"}).code == 0);
}

TEST_CASE("exit code mapping") {
  CHECK(cli::ExitCodeFor(ErrorKind::kParseError) == cli::kIoOrParse);
  CHECK(cli::ExitCodeFor(ErrorKind::kEnvelopeViolation) ==
        cli::kInvalidFunction);
  CHECK(cli::ExitCodeFor(ErrorKind::kInvariantViolation) ==
        cli::kInvariantViolation);
}

}  // namespace
}  // namespace evc
