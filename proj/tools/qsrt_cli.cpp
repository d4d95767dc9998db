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

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "qsrt/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Classical simulator for multi-step resonant-transition ground-state preparation"};
  app.require_subcommand(1);

  qsrt::cli::ExperimentConfig cfg;
  std::string config_file;
  std::string f_sweep_arg;
  std::uint64_t seed_value = 0;
  bool seed_given = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "JSON config file (flags win)");
    sub->add_option("--output", cfg.output, "artifact directory");
    sub->add_option("--tag", cfg.tag, "artifact tag (default: timestamp)");
    sub->add_option("--seed", seed_value, "RNG seed")->each([&](const std::string&) {
      seed_given = true;
    });
    sub->add_option("--c", cfg.coupling, "probe coupling");
    sub->add_option("--eps", cfg.epsilon, "eigenvalue accuracy target");
    sub->add_option("--max-iters", cfg.max_total_iters, "trial budget");
    sub->add_option("--dense-cap", cfg.dense_cap, "dense dimension cap");
  };

  CLI::App* scan = app.add_subcommand("gap-scan", "scan the spectral gap over s");
  add_common(scan);
  scan->add_option("--case", cfg.scan_case, "a | b | c");
  scan->add_option("--n", cfg.n, "qubit count");
  scan->add_option("--grid", cfg.grid, "grid points");
  scan->add_flag("--stepwise", cfg.stepwise, "scan the adjacent-step 3x3 block");
  scan->add_option("--f", cfg.f, "marked fraction N_j / N");
  scan->add_option("--ratio", cfg.ratio, "marked ratio N_j / N_{j-1}");
  scan->add_option("--f-sweep", f_sweep_arg, "comma-separated f values");
  scan->add_option("--problem", cfg.problem_file, "problem JSON document");

  CLI::App* qrun = app.add_subcommand("qsrt-run", "run the protocol on a problem document");
  add_common(qrun);
  qrun->add_option("--problem", cfg.problem_file, "problem JSON document")->required();

  CLI::App* sdemo = app.add_subcommand("search-demo", "single- or two-step search run");
  add_common(sdemo);
  sdemo->add_option("--n", cfg.n, "qubit count")->required();
  sdemo->add_option("--nq", cfg.Nq, "marked items");
  sdemo->add_option("--steps", cfg.search_steps, "1 or 2 chain steps");

  CLI::App* mdemo = app.add_subcommand("minfind-demo", "full minimum-finding chain");
  add_common(mdemo);
  mdemo->add_option("--n", cfg.n, "qubit count")->required();

  CLI::App* fdemo = app.add_subcommand("factor-demo", "order finding at desk scale");
  add_common(fdemo);
  fdemo->add_option("--Z", cfg.Z, "integer to factor")->required();
  fdemo->add_option("--a", cfg.a, "coprime base")->required();
  fdemo->add_option("--n", cfg.n, "qubit count (default: smallest with 2^n >= Z)");

  CLI::App* ebound = app.add_subcommand("error-bound", "first-order leakage and success bounds");
  add_common(ebound);
  ebound->add_option("--gap-prev", cfg.gap_prev, "previous-step gap")->required();
  ebound->add_option("--gap-curr", cfg.gap_curr, "current-step gap")->required();
  ebound->add_option("--d0", cfg.d0, "ground-state overlap")->required();
  ebound->add_option("--alpha", cfg.alpha, "rescale factor");
  ebound->add_option("--m", cfg.m_steps, "step count for the success bound");

  CLI::App* sfit = app.add_subcommand("scaling-fit", "log-log power-law fit of a CSV");
  add_common(sfit);
  sfit->add_option("--input", cfg.input_file, "CSV with x,y in the first two columns")
      ->required();

  CLI::App* rep = app.add_subcommand("reproduce", "run the full reference-number suite");
  add_common(rep);
  rep->add_option("--grid", cfg.grid, "scan grid points");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!config_file.empty()) qsrt::cli::apply_config_file(cfg, config_file);
    if (seed_given) cfg.seed = seed_value;
    if (!f_sweep_arg.empty()) {
      std::stringstream ss(f_sweep_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.f_sweep.push_back(std::stod(tok));
    }
    return qsrt::cli::run(cfg);
  } catch (const qsrt::ConfigInvalidError& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return 2;
  } catch (const qsrt::Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
