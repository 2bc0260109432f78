# Copyright 2026 The shuffledp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import shuffledp


def test_version_is_exposed():
    assert shuffledp.__version__ == "0.1.0"


def test_compute_p_matches_frozen_value():
    assert shuffledp.compute_p(1.0, 0.1, 1000) == 0.8502133863223005
    assert shuffledp.compute_p(0.5, 0.01, 3000) == 0.6467788422301309


def test_validate_params_reports_violations():
    assert shuffledp.validate_params(1.0, 0.1, 1000) == []
    violations = shuffledp.validate_params(1.0, 0.1, 10)
    assert len(violations) == 1
    assert "n" in violations[0]


def test_zsum_alpha_matches_frozen_value():
    alpha = shuffledp.zsum_alpha(1.0, 0.1, 1000, 0.05)
    assert alpha == pytest.approx(0.19679915505537737, rel=1e-15)


def test_run_zsum_protocol_zero_input_is_exact():
    for seed in (1, 2, 3):
        assert shuffledp.run_zsum_protocol([0] * 1000, 1.0, 0.1, seed) == 0.0
        assert shuffledp.run_zsum_protocol([0] * 1000, 1.0, 0.1, seed, True) == 0.0


def test_run_zsum_protocol_tracks_the_mean():
    rows = [1] * 500 + [0] * 500
    estimate = shuffledp.run_zsum_protocol(rows, 1.0, 0.1, 7)
    assert abs(estimate - 0.5) < 0.2


def test_aggregate_simulate_keeps_zero_bins_at_zero():
    estimates = shuffledp.aggregate_simulate([600, 0, 400, 0], 1.0, 0.1, 11)
    assert len(estimates) == 4
    assert estimates[1] == 0.0
    assert estimates[3] == 0.0


def test_privacy_report_passes_at_the_contract_point():
    report = shuffledp.zsum_privacy_report(1.0, 0.1, 1000, 1.0)
    assert report["pass"]
    assert report["delta_achieved"] < 1e-19


def test_mneg_check_orders_the_chain():
    report = shuffledp.mneg_privacy_check(1.0, 0.1, 1000)
    assert report["chain_ok"]
    assert report["exact_delta"] <= report["smooth_exact"] <= report["bound_delta"]
    assert math.isclose(report["gamma"], 0.14978661367769952, rel_tol=1e-12)


def test_plan_and_solve_support_round_trip():
    plan = shuffledp.plan_support_run(4, 100, 1.0, 0.01)
    assert plan["t"] == 375
    assert plan["n"] == 3301
    assert shuffledp.required_samples(4, plan["t"]) == plan["n"]

    rows = []
    support = [7, 19, 23, 55]
    for i in range(plan["n"]):
        rows.append(support[i % 4])
    recovered = shuffledp.solve_support(rows, 100, 1.0, 0.01, plan["t"], 5)
    assert sorted(recovered) == support


def test_experiment_csv_is_deterministic():
    config = "trials=10\nn=400\n"
    first = shuffledp.experiment_csv("run-zsum", config)
    second = shuffledp.experiment_csv("run-zsum", config)
    assert first == second
    assert first.startswith("#")
    assert "input,true_mean" in first

    with pytest.raises(ValueError):
        shuffledp.experiment_csv("no-such-experiment", "")
