// Copyright 2026 The shuffledp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shuffledp/config.hpp"
#include "shuffledp/experiments.hpp"
#include "shuffledp/result_table.hpp"

namespace {

using shuffledp::ExperimentConfig;
using shuffledp::ResultTable;

struct SubcommandSpec {
  std::string name;
  std::string help;
  std::function<ResultTable(const ExperimentConfig&)> run;
};

struct SubcommandState {
  CLI::App* cmd = nullptr;
  ExperimentConfig flags;    // values given on the command line
  std::uint64_t t_flag = 0;  // staging for the optional threshold
  std::string config_path;
};

void attach_options(SubcommandState& state) {
  CLI::App* cmd = state.cmd;
  // --h is a protocol parameter, so help has no short flag.
  cmd->set_help_flag("--help", "print help");
  cmd->add_option("--config", state.config_path, "key=value config file; flags override it");
  cmd->add_option("--epsilon", state.flags.epsilon, "privacy parameter epsilon");
  cmd->add_option("--delta", state.flags.delta, "privacy parameter delta");
  cmd->add_option("--n", state.flags.n, "number of users / samples");
  cmd->add_option("--d", state.flags.d, "universe size");
  cmd->add_option("--beta", state.flags.beta, "accuracy failure probability");
  cmd->add_option("--trials", state.flags.trials, "number of Monte Carlo trials");
  cmd->add_option("--seed", state.flags.seed, "root seed (fixed default)");
  cmd->add_option("--mode", state.flags.mode, "faithful or aggregate");
  cmd->add_option("--format", state.flags.format, "csv or json");
  cmd->add_option("--out", state.flags.out, "output path; stdout when omitted");
  cmd->add_option("--h", state.flags.h, "hidden support size / tree height");
  cmd->add_option("--ell", state.flags.ell, "permutation length (pointer chasing)");
  cmd->add_option("--k", state.flags.k, "chase length (pointer chasing)");
  cmd->add_option("--s", state.flags.s, "tree arity (pointer jumping)");
  cmd->add_option("--t", state.t_flag, "recovery threshold override");
}

// File values first, then any flag present on the command line wins.
ExperimentConfig merge_config(const SubcommandState& state) {
  ExperimentConfig config;
  if (!state.config_path.empty()) {
    config = ExperimentConfig::from_file(state.config_path);
  }
  const CLI::App* cmd = state.cmd;
  const ExperimentConfig& flags = state.flags;
  if (cmd->count("--epsilon")) config.epsilon = flags.epsilon;
  if (cmd->count("--delta")) config.delta = flags.delta;
  if (cmd->count("--n")) config.n = flags.n;
  if (cmd->count("--d")) config.d = flags.d;
  if (cmd->count("--beta")) config.beta = flags.beta;
  if (cmd->count("--trials")) config.trials = flags.trials;
  if (cmd->count("--seed")) config.seed = flags.seed;
  if (cmd->count("--mode")) config.mode = flags.mode;
  if (cmd->count("--format")) config.format = flags.format;
  if (cmd->count("--out")) config.out = flags.out;
  if (cmd->count("--h")) config.h = flags.h;
  if (cmd->count("--ell")) config.ell = flags.ell;
  if (cmd->count("--k")) config.k = flags.k;
  if (cmd->count("--s")) config.s = flags.s;
  if (cmd->count("--t")) config.t = state.t_flag;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shuffled-model private counting, histograms, and solvers"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  const std::vector<SubcommandSpec> specs = {
      {"run-zsum", "counting protocol accuracy experiment", shuffledp::run_zsum},
      {"run-hist", "histogram error sweep vs local baseline", shuffledp::run_hist},
      {"verify-privacy", "exact divergence and smoothness checks", shuffledp::verify_privacy},
      {"solve-support", "support identification solver", shuffledp::solve_support_experiment},
      {"solve-pc", "pointer chasing solver", shuffledp::solve_pc_experiment},
      {"solve-mpj", "pointer jumping solver", shuffledp::solve_mpj_experiment},
      {"puredp-demo", "shuffled vs local gap demos", shuffledp::puredp_demo},
  };

  std::vector<SubcommandState> states(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    states[i].cmd = app.add_subcommand(specs[i].name, specs[i].help);
    attach_options(states[i]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!states[i].cmd->parsed()) continue;
    try {
      const ExperimentConfig config = merge_config(states[i]);
      const auto start = std::chrono::steady_clock::now();
      const ResultTable table = specs[i].run(config);
      table.write(config.format, config.out);
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      // Wall time goes to stderr only; result files stay reproducible.
      std::cerr << "[" << specs[i].name << "] rows=" << table.rows.size()
                << " seed=" << config.seed << " wall_ms=" << elapsed.count() << "\n";
      return 0;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 2;
    }
  }
  std::cerr << "error: no subcommand selected\n";
  return 1;
}
