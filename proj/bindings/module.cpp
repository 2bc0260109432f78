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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "shuffledp/apps.hpp"
#include "shuffledp/config.hpp"
#include "shuffledp/core.hpp"
#include "shuffledp/experiments.hpp"
#include "shuffledp/hist.hpp"
#include "shuffledp/privacy.hpp"
#include "shuffledp/puredp.hpp"
#include "shuffledp/zsum.hpp"

namespace py = pybind11;

namespace {

using namespace shuffledp;

// Python-facing wrappers hold seeds instead of stream references so calls
// stay stateless and reproducible.

double py_run_zsum_protocol(const std::vector<std::uint64_t>& rows, double epsilon,
                            double delta, std::uint64_t seed, bool faithful) {
  const ProtocolParams params{epsilon, delta, rows.size()};
  const ZsumParams zp = make_zsum_params(params);
  RngStream rng(seed);
  if (faithful) {
    return run_zsum_protocol(Dataset::binary(rows), zp, rng);
  }
  std::uint64_t sum = 0;
  for (auto r : rows) sum += r;
  const BinomialSampler noise(params.n, zp.p);
  return zsum_analyze(sum + noise.sample(rng), zp);
}

std::vector<double> py_aggregate_simulate(const std::vector<std::uint64_t>& counts,
                                          double epsilon, double delta,
                                          std::uint64_t seed) {
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  const HistParams hp = make_hist_params(counts.size(), ProtocolParams{epsilon, delta, n});
  RngStream rng(seed);
  return aggregate_simulate(counts, hp, rng).estimates;
}

py::dict py_zsum_privacy_report(double epsilon, double delta, std::uint64_t n,
                                double epsilon_target) {
  const PrivacyReport report = zsum_privacy_delta(ProtocolParams{epsilon, delta, n},
                                                  epsilon_target);
  py::dict out;
  out["epsilon_target"] = report.epsilon_target;
  out["delta_target"] = report.delta_target;
  out["delta_achieved"] = report.delta_achieved;
  out["direction"] =
      report.direction == NeighborDirection::kAdd ? "add" : "remove";
  out["pass"] = report.pass();
  return out;
}

py::dict py_mneg_privacy_check(double epsilon, double delta, std::uint64_t n) {
  const MnegReport report = mneg_privacy_check(ProtocolParams{epsilon, delta, n});
  py::dict out;
  out["gamma"] = report.gamma;
  out["alpha"] = report.alpha;
  out["gamma_in_range"] = report.gamma_in_range;
  out["bound_epsilon"] = report.bound.epsilon;
  out["bound_delta"] = report.bound.delta;
  out["k_limit"] = report.bound.k_limit;
  out["smooth_exact"] = report.smooth_exact;
  out["exact_delta"] = report.exact_delta;
  out["chain_ok"] = report.chain_ok;
  out["pass"] = report.pass;
  return out;
}

std::set<std::uint64_t> py_solve_support(const std::vector<std::uint64_t>& rows,
                                         std::uint64_t d, double epsilon, double delta,
                                         std::uint64_t t, std::uint64_t seed) {
  const ProtocolParams params{epsilon, delta, rows.size()};
  RngStream rng(seed);
  return solve_support(Dataset::categorical(rows, d), params, t, rng);
}

py::dict py_plan_support_run(std::uint64_t h, std::uint64_t d, double epsilon,
                             double delta) {
  const SupportRunPlan plan = plan_support_run(h, BigUint(d), epsilon, delta);
  py::dict out;
  out["t"] = plan.t;
  out["n"] = plan.n;
  out["beta"] = plan.beta;
  return out;
}

std::string py_experiment_csv(const std::string& subcommand, const std::string& config_text) {
  const ExperimentConfig config = ExperimentConfig::from_string(config_text);
  ResultTable table;
  if (subcommand == "run-zsum") table = run_zsum(config);
  else if (subcommand == "run-hist") table = run_hist(config);
  else if (subcommand == "verify-privacy") table = verify_privacy(config);
  else if (subcommand == "solve-support") table = solve_support_experiment(config);
  else if (subcommand == "solve-pc") table = solve_pc_experiment(config);
  else if (subcommand == "solve-mpj") table = solve_mpj_experiment(config);
  else if (subcommand == "puredp-demo") table = puredp_demo(config);
  else throw std::invalid_argument("unknown subcommand: " + subcommand);
  return table.to_csv();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "shuffled-model differential privacy: counting, histograms, verification";
  m.attr("__version__") = kVersion;

  m.def("compute_p", [](double epsilon, double delta, std::uint64_t n) {
          return compute_p(ProtocolParams{epsilon, delta, n});
        },
        py::arg("epsilon"), py::arg("delta"), py::arg("n"),
        "Blanket noise probability for valid protocol parameters");
  m.def("validate_params", [](double epsilon, double delta, std::uint64_t n) {
          return validate_params(ProtocolParams{epsilon, delta, n});
        },
        py::arg("epsilon"), py::arg("delta"), py::arg("n"),
        "List of violated parameter conditions; empty means valid");
  m.def("zsum_alpha", [](double epsilon, double delta, std::uint64_t n, double beta) {
          return zsum_alpha(ProtocolParams{epsilon, delta, n}, beta);
        },
        py::arg("epsilon"), py::arg("delta"), py::arg("n"), py::arg("beta"),
        "High-probability additive error bound of the counting protocol");
  m.def("run_zsum_protocol", &py_run_zsum_protocol, py::arg("rows"), py::arg("epsilon"),
        py::arg("delta"), py::arg("seed"), py::arg("faithful") = false,
        "One counting-protocol execution over a binary dataset");
  m.def("aggregate_simulate", &py_aggregate_simulate, py::arg("counts"),
        py::arg("epsilon"), py::arg("delta"), py::arg("seed"),
        "Histogram estimates sampled from true bin counts");
  m.def("zsum_privacy_report", &py_zsum_privacy_report, py::arg("epsilon"),
        py::arg("delta"), py::arg("n"), py::arg("epsilon_target"),
        "Exact divergence between neighboring transcript laws");
  m.def("mneg_privacy_check", &py_mneg_privacy_check, py::arg("epsilon"),
        py::arg("delta"), py::arg("n"),
        "Negated-sum smoothness certificate and exact cross-checks");
  m.def("solve_support", &py_solve_support, py::arg("rows"), py::arg("d"),
        py::arg("epsilon"), py::arg("delta"), py::arg("t"), py::arg("seed"),
        "Recover the sample support privately");
  m.def("plan_support_run", &py_plan_support_run, py::arg("h"), py::arg("d"),
        py::arg("epsilon"), py::arg("delta"),
        "Threshold and sample count for support recovery");
  m.def("required_samples", &required_samples, py::arg("h"), py::arg("t"),
        "Least n drawing every support element more than 2t times w.h.p.");
  m.def("experiment_csv", &py_experiment_csv, py::arg("subcommand"), py::arg("config_text"),
        "Run a named experiment from a config string and return its CSV");
}
