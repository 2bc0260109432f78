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

#include "shuffledp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "shuffledp/apps.hpp"
#include "shuffledp/hist.hpp"
#include "shuffledp/privacy.hpp"
#include "shuffledp/puredp.hpp"
#include "shuffledp/zsum.hpp"

namespace shuffledp {

namespace {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile: empty sample");
  std::sort(values.begin(), values.end());
  const auto idx = std::min(values.size() - 1,
                            static_cast<std::size_t>(q * static_cast<double>(values.size())));
  return values[idx];
}

double mean(const std::vector<double>& values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

void fill_common_metadata(ResultTable& table, const ExperimentConfig& config,
                          const std::string& subcommand) {
  table.metadata["subcommand"] = subcommand;
  table.metadata["version"] = kVersion;
  table.metadata["seed"] = format_u64(config.seed);
  table.metadata["epsilon"] = format_double(config.epsilon);
  table.metadata["delta"] = format_double(config.delta);
}

// Deterministic skewed counts: the first min(50, d) bins carry weights
// proportional to 1/j, rounded to sum exactly n (largest remainder).
std::vector<std::uint64_t> skewed_counts(std::uint64_t n, std::uint64_t d) {
  const std::uint64_t m = std::min<std::uint64_t>(50, d);
  double weight_total = 0.0;
  for (std::uint64_t j = 1; j <= m; ++j) weight_total += 1.0 / static_cast<double>(j);
  std::vector<std::uint64_t> counts(d, 0);
  std::vector<std::pair<double, std::uint64_t>> remainders;
  std::uint64_t assigned = 0;
  for (std::uint64_t j = 0; j < m; ++j) {
    const double exact = static_cast<double>(n) / (static_cast<double>(j + 1) * weight_total);
    counts[j] = static_cast<std::uint64_t>(exact);
    assigned += counts[j];
    remainders.emplace_back(exact - std::floor(exact), j);
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::uint64_t left = n - assigned, i = 0; left > 0; --left, ++i) {
    ++counts[remainders[i % remainders.size()].second];
  }
  return counts;
}

std::vector<std::uint64_t> rows_from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<std::uint64_t> rows;
  for (std::uint64_t j = 0; j < counts.size(); ++j) {
    rows.insert(rows.end(), counts[j], j + 1);
  }
  return rows;
}

struct ErrorSummary {
  double q50 = 0.0;
  double q95 = 0.0;
  double max = 0.0;
  double exceed_rate = 0.0;  // fraction above the bound passed in
};

ErrorSummary summarize(const std::vector<double>& errors, double bound) {
  ErrorSummary s;
  s.q50 = quantile(errors, 0.50);
  s.q95 = quantile(errors, 0.95);
  s.max = *std::max_element(errors.begin(), errors.end());
  std::uint64_t exceed = 0;
  for (double e : errors) {
    if (e > bound) ++exceed;
  }
  s.exceed_rate = static_cast<double>(exceed) / static_cast<double>(errors.size());
  return s;
}

}  // namespace

ResultTable run_zsum(const ExperimentConfig& config) {
  config.check();
  const ProtocolParams params = config.protocol();
  const ZsumParams zp = make_zsum_params(params);
  const double alpha = zsum_alpha(params, config.beta);

  ResultTable table;
  fill_common_metadata(table, config, "run-zsum");
  table.metadata["n"] = format_u64(config.n);
  table.metadata["beta"] = format_double(config.beta);
  table.metadata["mode"] = config.mode;
  table.metadata["trials"] = format_u64(config.trials);
  table.metadata["p"] = format_double(zp.p);
  table.columns = {"input",   "true_mean", "trials",      "mean_estimate", "err_q50",
                   "err_q95", "err_max",   "alpha_bound", "beta",          "exceed_rate"};

  const std::uint64_t n = config.n;
  const std::vector<std::pair<std::string, std::uint64_t>> patterns = {
      {"zeros", 0}, {"ones", n}, {"half", n / 2}};

  RngStream root(config.seed);
  const BinomialSampler noise(n, zp.p);
  for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
    const auto& [label, ones] = patterns[pi];
    const double true_mean = static_cast<double>(ones) / static_cast<double>(n);
    std::vector<std::uint64_t> rows(n, 0);
    std::fill(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(ones), 1);
    const Dataset data = Dataset::binary(rows);

    RngStream pattern_rng = root.child(pi);
    std::vector<double> estimates(config.trials), errors(config.trials);
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
      RngStream trial_rng = pattern_rng.child(trial);
      double est = 0.0;
      if (config.mode == "faithful") {
        est = run_zsum_protocol(data, zp, trial_rng);
      } else {
        est = zsum_analyze(ones + noise.sample(trial_rng), zp);
      }
      estimates[trial] = est;
      errors[trial] = std::fabs(est - true_mean);
    }
    const ErrorSummary s = summarize(errors, alpha);
    table.add_row({label, format_double(true_mean), format_u64(config.trials),
                   format_double(mean(estimates)), format_double(s.q50),
                   format_double(s.q95), format_double(s.max), format_double(alpha),
                   format_double(config.beta), format_double(s.exceed_rate)});
  }
  return table;
}

ResultTable run_hist(const ExperimentConfig& config) {
  config.check();
  const ProtocolParams params = config.protocol();
  const double alpha_sim = hist_simultaneous_alpha(params, config.beta);
  const double alpha_pq = zsum_alpha(params, config.beta);

  ResultTable table;
  fill_common_metadata(table, config, "run-hist");
  table.metadata["n"] = format_u64(config.n);
  table.metadata["beta"] = format_double(config.beta);
  table.metadata["mode"] = config.mode;
  table.metadata["trials"] = format_u64(config.trials);
  table.columns = {"d",           "protocol",    "trials",      "err_sim_q50",
                   "err_sim_q95", "err_sim_max", "alpha_sim",   "exceed_sim",
                   "err_q1_q50",  "err_q1_q95",  "err_q1_max",  "alpha_pq",
                   "exceed_q1"};

  std::vector<std::uint64_t> sweep;
  if (config.mode == "faithful") {
    if (config.d > 2000) {
      throw std::invalid_argument("run_hist: faithful mode needs d <= 2000");
    }
    sweep = {config.d};
  } else {
    sweep = {100, 10000, 1000000};
  }

  RngStream root(config.seed);
  for (std::size_t di = 0; di < sweep.size(); ++di) {
    const std::uint64_t d = sweep[di];
    const HistParams hp = make_hist_params(d, params);
    const auto counts = skewed_counts(config.n, d);
    const Dataset data = Dataset::categorical(rows_from_counts(counts), d);
    const TrueHistogram truth = true_histogram(data);

    RngStream d_rng = root.child(di);
    RngStream shuffled_rng = d_rng.child(0);
    RngStream local_rng = d_rng.child(1);

    std::vector<double> shuffled_sim(config.trials), shuffled_q1(config.trials);
    std::vector<double> local_sim(config.trials), local_q1(config.trials);
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
      RngStream trial_rng = shuffled_rng.child(trial);
      HistogramEstimate est;
      if (config.mode == "faithful") {
        est = run_hist_protocol(data, hp, trial_rng);
      } else {
        est = aggregate_simulate(counts, hp, trial_rng);
      }
      shuffled_sim[trial] = simultaneous_error(est, truth);
      shuffled_q1[trial] = per_query_error(est, truth, 1);
    }
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
      RngStream trial_rng = local_rng.child(trial);
      const HistogramEstimate est = run_local_rr(data, config.epsilon, trial_rng);
      local_sim[trial] = simultaneous_error(est, truth);
      local_q1[trial] = per_query_error(est, truth, 1);
    }

    const ErrorSummary ss = summarize(shuffled_sim, alpha_sim);
    const ErrorSummary sq = summarize(shuffled_q1, alpha_pq);
    table.add_row({format_u64(d), "shuffled", format_u64(config.trials),
                   format_double(ss.q50), format_double(ss.q95), format_double(ss.max),
                   format_double(alpha_sim), format_double(ss.exceed_rate),
                   format_double(sq.q50), format_double(sq.q95), format_double(sq.max),
                   format_double(alpha_pq), format_double(sq.exceed_rate)});
    const ErrorSummary ls = summarize(local_sim, alpha_sim);
    const ErrorSummary lq = summarize(local_q1, alpha_pq);
    table.add_row({format_u64(d), "local", format_u64(config.trials),
                   format_double(ls.q50), format_double(ls.q95), format_double(ls.max),
                   "", "", format_double(lq.q50), format_double(lq.q95),
                   format_double(lq.max), "", ""});
  }
  return table;
}

ResultTable verify_privacy(const ExperimentConfig& config) {
  config.check();
  ResultTable table;
  fill_common_metadata(table, config, "verify-privacy");
  table.metadata["n"] = format_u64(config.n);
  table.columns = {"check",          "epsilon",      "delta",     "n",
                   "p",              "epsilon_target", "delta_target", "delta_achieved",
                   "direction",      "pass",         "detail"};

  auto direction_name = [](NeighborDirection d) {
    return d == NeighborDirection::kAdd ? std::string("add") : std::string("remove");
  };

  auto add_exact_row = [&](const ProtocolParams& p, double eps_target) {
    const PrivacyReport report = zsum_privacy_delta(p, eps_target);
    table.add_row({"zsum_exact", format_double(p.epsilon), format_double(p.delta),
                   format_u64(p.n), format_double(compute_p(p)), format_double(eps_target),
                   format_double(p.delta), format_double(report.delta_achieved),
                   direction_name(report.direction), format_bool(report.pass()), ""});
  };

  add_exact_row(config.protocol(), config.epsilon);
  add_exact_row(ProtocolParams{0.8, 0.05, 2000}, 0.8);
  add_exact_row(ProtocolParams{0.5, 0.01, 3000}, 0.5);

  {
    // Deliberately below the required n: the divergence is computed from the
    // raw noise formula and demonstrably exceeds the target.
    const double eps = 1.0, delta = 0.01;
    const std::uint64_t n = 266;
    const double p = 1.0 - 50.0 / (eps * eps * static_cast<double>(n)) * std::log(2.0 / delta);
    NeighborDirection dir = NeighborDirection::kAdd;
    const double achieved = zsum_privacy_delta_value(n, p, eps, &dir);
    table.add_row({"zsum_exact_undersized", format_double(eps), format_double(delta),
                   format_u64(n), format_double(p), format_double(eps),
                   format_double(delta), format_double(achieved), direction_name(dir),
                   format_bool(achieved <= delta), "n below validity bound"});
  }

  {
    // Divergence at epsilon_target 0 is positive; no pass/fail claim applies.
    const ProtocolParams p = config.protocol();
    NeighborDirection dir = NeighborDirection::kAdd;
    const double achieved = zsum_privacy_delta_value(p.n, compute_p(p), 0.0, &dir);
    table.add_row({"zsum_exact_eps0", format_double(p.epsilon), format_double(p.delta),
                   format_u64(p.n), format_double(compute_p(p)), format_double(0.0), "",
                   format_double(achieved), direction_name(dir), "", ""});
  }

  auto add_mneg_rows = [&](const ProtocolParams& p) {
    const MnegReport report = mneg_privacy_check(p);
    table.add_row({"mneg_smoothness", format_double(p.epsilon), format_double(p.delta),
                   format_u64(p.n), format_double(compute_p(p)), format_double(p.epsilon),
                   format_double(p.delta), format_double(report.bound.delta), "",
                   format_bool(report.pass),
                   "gamma=" + format_double(report.gamma) +
                       ";alpha=" + format_double(report.alpha) +
                       ";k_limit=" + format_double(report.bound.k_limit)});
    table.add_row({"mneg_chain", format_double(p.epsilon), format_double(p.delta),
                   format_u64(p.n), format_double(compute_p(p)), format_double(p.epsilon),
                   format_double(p.delta), format_double(report.exact_delta), "",
                   format_bool(report.chain_ok && report.exact_delta <= p.delta),
                   "smooth_exact=" + format_double(report.smooth_exact)});
  };
  add_mneg_rows(config.protocol());
  add_mneg_rows(ProtocolParams{1.0, 0.1, 300});

  auto add_brute_force_row = [&](std::uint64_t n, double p, double eps) {
    FiniteRandomizerLaw law;
    law.by_input[0] = {{zsum_message(0, 0), 1.0 - p}, {zsum_message(0, 1), p}};
    law.by_input[1] = {{zsum_message(1, 0), 1.0 - p}, {zsum_message(1, 1), p}};
    const double brute = brute_force_shuffled_dp(law, n, eps);
    const double analytic = zsum_privacy_delta_value(n, p, eps);
    const double diff = std::fabs(brute - analytic);
    table.add_row({"brute_force_agreement", "", "", format_u64(n), format_double(p),
                   format_double(eps), "", format_double(brute), "",
                   format_bool(diff <= 1e-12), "analytic=" + format_double(analytic) +
                                                   ";diff=" + format_double(diff)});
  };
  add_brute_force_row(6, 0.85, 0.5);
  add_brute_force_row(8, 0.7, 0.25);

  return table;
}

namespace {

struct SolverOutcome {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

void add_solver_row(ResultTable& table, const std::string& solver, std::uint64_t h,
                    const BigUint& d, const std::string& ell, const std::string& s,
                    const std::string& k, const SupportRunPlan& plan,
                    const SolverOutcome& outcome) {
  table.add_row({solver, format_u64(h), d.to_string(), ell, s, k, format_u64(plan.n),
                 format_u64(plan.t), format_u64(outcome.trials),
                 format_u64(outcome.successes),
                 format_double(static_cast<double>(outcome.successes) /
                               static_cast<double>(outcome.trials))});
}

void fill_solver_table(ResultTable& table, const ExperimentConfig& config,
                       const std::string& subcommand) {
  fill_common_metadata(table, config, subcommand);
  table.metadata["trials"] = format_u64(config.trials);
  table.columns = {"solver", "h", "d",      "ell",        "s",        "k",
                   "n",      "t", "trials", "successes", "success_rate"};
}

SupportRunPlan resolve_plan(const ExperimentConfig& config, std::uint64_t h,
                            const BigUint& d) {
  SupportRunPlan plan = plan_support_run(h, d, config.epsilon, config.delta);
  if (config.t.has_value()) plan.t = *config.t;
  return plan;
}

}  // namespace

ResultTable solve_support_experiment(const ExperimentConfig& config) {
  config.check();
  if (config.h == 0 || config.h > config.d) {
    throw std::invalid_argument("solve_support_experiment: need 1 <= h <= d");
  }
  ResultTable table;
  fill_solver_table(table, config, "solve-support");
  const BigUint d(config.d);
  const SupportRunPlan plan = resolve_plan(config, config.h, d);
  const ProtocolParams params{config.epsilon, config.delta, plan.n};

  RngStream root(config.seed);
  SolverOutcome outcome;
  outcome.trials = config.trials;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    RngStream trial_rng = root.child(trial);
    RngStream inst_rng = trial_rng.child(0);
    RngStream sample_rng = trial_rng.child(1);
    RngStream solver_rng = trial_rng.child(2);

    SupportInstance inst;
    inst.d = config.d;
    // h distinct values via partial Fisher-Yates over {1..d}.
    std::vector<std::uint64_t> pool(config.d);
    std::iota(pool.begin(), pool.end(), 1ull);
    for (std::uint64_t i = 0; i < config.h; ++i) {
      const std::uint64_t j = i + inst_rng.uniform_int(config.d - i);
      std::swap(pool[i], pool[j]);
      inst.support.push_back(pool[i]);
    }

    const Dataset data = sample_instance(inst, plan.n, sample_rng);
    const auto recovered = solve_support(data, params, plan.t, solver_rng);
    const std::set<std::uint64_t> expected(inst.support.begin(), inst.support.end());
    if (recovered == expected) ++outcome.successes;
  }
  add_solver_row(table, "support", config.h, d, "", "", "", plan, outcome);
  return table;
}

ResultTable solve_pc_experiment(const ExperimentConfig& config) {
  config.check();
  if (config.ell < 2 || config.k < 1) {
    throw std::invalid_argument("solve_pc_experiment: need ell >= 2, k >= 1");
  }
  ResultTable table;
  fill_solver_table(table, config, "solve-pc");
  const std::uint32_t ell = static_cast<std::uint32_t>(config.ell);
  const std::uint32_t k = static_cast<std::uint32_t>(config.k);
  const BigUint d = pc_code_space(ell);
  const SupportRunPlan plan = resolve_plan(config, 2, d);
  const ProtocolParams params{config.epsilon, config.delta, plan.n};

  RngStream root(config.seed);
  SolverOutcome outcome;
  outcome.trials = config.trials;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    RngStream trial_rng = root.child(trial);
    RngStream inst_rng = trial_rng.child(0);
    RngStream sample_rng = trial_rng.child(1);
    RngStream solver_rng = trial_rng.child(2);

    const PcInstance inst = random_pc_instance(ell, inst_rng);
    const auto samples = sample_instance(inst, plan.n, sample_rng);
    const auto answer = solve_pc(samples, params, k, ell, plan.t, solver_rng);
    if (answer.has_value() && *answer == chase_pointer(inst.a, inst.b, k)) {
      ++outcome.successes;
    }
  }
  add_solver_row(table, "pc", 2, d, format_u64(config.ell), "", format_u64(config.k),
                 plan, outcome);
  return table;
}

ResultTable solve_mpj_experiment(const ExperimentConfig& config) {
  config.check();
  if (config.s < 2 || config.h < 1) {
    throw std::invalid_argument("solve_mpj_experiment: need s >= 2, h >= 1");
  }
  ResultTable table;
  fill_solver_table(table, config, "solve-mpj");
  const std::uint32_t s = static_cast<std::uint32_t>(config.s);
  const std::uint32_t h = static_cast<std::uint32_t>(config.h);
  const BigUint d = mpj_code_space(s, h);
  const SupportRunPlan plan = resolve_plan(config, h, d);
  const ProtocolParams params{config.epsilon, config.delta, plan.n};

  RngStream root(config.seed);
  SolverOutcome outcome;
  outcome.trials = config.trials;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    RngStream trial_rng = root.child(trial);
    RngStream inst_rng = trial_rng.child(0);
    RngStream sample_rng = trial_rng.child(1);
    RngStream solver_rng = trial_rng.child(2);

    const MpjInstance inst = random_mpj_instance(s, h, inst_rng);
    const auto samples = sample_instance(inst, plan.n, sample_rng);
    const auto answer = solve_mpj(samples, params, s, h, plan.t, solver_rng);
    if (answer.has_value() && *answer == chase_path(inst)) ++outcome.successes;
  }
  add_solver_row(table, "mpj", h, d, "", format_u64(config.s), "", plan, outcome);
  return table;
}

ResultTable puredp_demo(const ExperimentConfig& config) {
  config.check();
  ResultTable table;
  fill_common_metadata(table, config, "puredp-demo");
  table.columns = {"randomizer", "n", "max_log_ratio", "count_support_complete", "detail"};

  const FiniteRandomizerLaw pair_law = r_infinity_law();
  for (std::uint64_t n = 1; n <= 4; ++n) {
    double worst = 0.0;
    for (std::uint64_t ones = 0; ones < n; ++ones) {
      const auto base = shuffled_multiset_law(pair_law, {{0, n - ones}, {1, ones}});
      const auto nbr = shuffled_multiset_law(pair_law, {{0, n - ones - 1}, {1, ones + 1}});
      worst = std::max(worst, multiset_law_max_log_ratio(base, nbr));
    }
    table.add_row({"pair", format_u64(n), format_double(worst), "",
                   "transcript constant across inputs"});
  }

  for (std::uint64_t n = 1; n <= 6; ++n) {
    double worst = 0.0;
    for (std::uint64_t ones = 0; ones < n; ++ones) {
      worst = std::max(worst, pure_dp_max_ratio(r_gap_shuffled_count_law(ones, n),
                                                r_gap_shuffled_count_law(ones + 1, n)));
    }
    const auto reach = count_support_reachability({0, 1, 3, 4}, n);
    bool complete = reach.size() == 4 * n + 1;
    table.add_row({"gap", format_u64(n), format_double(worst), format_bool(complete),
                   "worst over all neighboring inputs"});
  }
  return table;
}

}  // namespace shuffledp
