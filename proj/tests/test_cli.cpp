// Copyright 2026 The qsrtsim Authors
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

#include <catch2/catch.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsrt/cli.hpp"

using namespace qsrt;
using namespace qsrt::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("qsrt-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("problem documents reject unknown fields and round-trip") {
  nlohmann::json good = to_json(make_problem("minfind", 6, {}));
  ProblemDocument doc = problem_from_json(good);
  CHECK(doc.kind == "minfind");
  CHECK(doc.N == 64);
  CHECK(to_json(doc) == good);

  nlohmann::json bad = good;
  bad["extra"] = 1;
  CHECK_THROWS_AS(problem_from_json(bad), ConfigInvalidError);
}

TEST_CASE("stochastic commands require a seed") {
  ExperimentConfig cfg;
  cfg.command = "minfind-demo";
  cfg.n = 4;
  cfg.output = temp_dir("seedless").string();
  CHECK_THROWS_AS(run(cfg), ConfigInvalidError);
}

TEST_CASE("unknown config fields are rejected") {
  fs::path dir = temp_dir("cfgfile");
  fs::path cfg_path = dir / "cfg.json";
  {
    std::ofstream out(cfg_path);
    out << R"({"command":"gap-scan","wat":1})";
  }
  ExperimentConfig cfg;
  CHECK_THROWS_AS(apply_config_file(cfg, cfg_path.string()), ConfigInvalidError);
}

TEST_CASE("gap-scan artifacts: summary values and schema round-trip") {
  fs::path dir = temp_dir("scan");
  ExperimentConfig cfg;
  cfg.command = "gap-scan";
  cfg.scan_case = "c";
  cfg.n = 10;
  cfg.grid = 501;
  cfg.tag = "t";
  cfg.output = dir.string();
  CHECK(run(cfg) == 0);
  nlohmann::json summary;
  std::ifstream(dir / "gap-scan-t.json") >> summary;
  CHECK(summary.at("minGap").get<double>() == Approx(0.05623).epsilon(1e-3));
  CHECK(summary.at("sStar").get<double>() == Approx(0.09986).epsilon(1e-3));
  std::string csv = slurp(dir / "gap-scan-t.csv");
  CHECK(csv.rfind("s,E0,E1,gap\n", 0) == 0);
}

TEST_CASE("same seed and tag produce byte-identical artifacts") {
  fs::path d1 = temp_dir("det1");
  fs::path d2 = temp_dir("det2");
  for (const fs::path& dir : {d1, d2}) {
    ExperimentConfig cfg;
    cfg.command = "minfind-demo";
    cfg.n = 5;
    cfg.coupling = 5e-3;
    cfg.seed = 42;
    cfg.tag = "same";
    cfg.output = dir.string();
    REQUIRE(run(cfg) == 0);
  }
  for (const char* ext : {"jsonl", "csv", "json"}) {
    std::string a = slurp(d1 / (std::string("minfind-demo-same.") + ext));
    std::string b = slurp(d2 / (std::string("minfind-demo-same.") + ext));
    CHECK(a == b);
    CHECK(!a.empty());
  }
}

TEST_CASE("factor demo identifies the ground manifold and factors") {
  fs::path dir = temp_dir("factor");
  ExperimentConfig cfg;
  cfg.command = "factor-demo";
  cfg.Z = 15;
  cfg.a = 2;
  cfg.coupling = 5e-3;
  cfg.seed = 7;
  cfg.tag = "f";
  cfg.output = dir.string();
  REQUIRE(run(cfg) == 0);
  nlohmann::json summary;
  std::ifstream(dir / "factor-demo-f.json") >> summary;
  CHECK(summary.at("groundManifold") == nlohmann::json({0, 4, 8, 12}));
  CHECK(summary.at("order").get<int>() == 4);
  CHECK(summary.at("factors") == nlohmann::json({3, 5}));
}

TEST_CASE("scaling-fit consumes stepwise sweep output") {
  fs::path dir = temp_dir("fit");
  ExperimentConfig sweep;
  sweep.command = "gap-scan";
  sweep.stepwise = true;
  sweep.f_sweep = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  sweep.grid = 2001;
  sweep.tag = "e";
  sweep.output = dir.string();
  REQUIRE(run(sweep) == 0);

  ExperimentConfig fit;
  fit.command = "scaling-fit";
  fit.input_file = (dir / "gap-scan-e.csv").string();
  fit.tag = "fit";
  fit.output = dir.string();
  REQUIRE(run(fit) == 0);
  nlohmann::json summary;
  std::ifstream(dir / "scaling-fit-fit.json") >> summary;
  CHECK(summary.at("exponent").get<double>() == Approx(2.0).margin(0.1));
}

TEST_CASE("error-bound prints finite values") {
  fs::path dir = temp_dir("bound");
  ExperimentConfig cfg;
  cfg.command = "error-bound";
  cfg.gap_prev = 0.7;
  cfg.gap_curr = 0.64;
  cfg.d0 = 0.7;
  cfg.alpha = 2.0;
  cfg.coupling = 1e-2;
  cfg.m_steps = 9;
  cfg.tag = "b";
  cfg.output = dir.string();
  REQUIRE(run(cfg) == 0);
  nlohmann::json summary;
  std::ifstream(dir / "error-bound-b.json") >> summary;
  CHECK(summary.at("boundA2C2").get<double>() > 0.0);
  CHECK(summary.at("successBound").get<double>() > 0.9);
}
