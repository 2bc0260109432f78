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

"""Shuffled-model differential privacy: counting, histograms, verification."""

from shuffledp._core import (
    __version__,
    aggregate_simulate,
    compute_p,
    experiment_csv,
    mneg_privacy_check,
    plan_support_run,
    required_samples,
    run_zsum_protocol,
    solve_support,
    validate_params,
    zsum_alpha,
    zsum_privacy_report,
)

__all__ = [
    "__version__",
    "aggregate_simulate",
    "compute_p",
    "experiment_csv",
    "mneg_privacy_check",
    "plan_support_run",
    "required_samples",
    "run_zsum_protocol",
    "solve_support",
    "validate_params",
    "zsum_alpha",
    "zsum_privacy_report",
]
