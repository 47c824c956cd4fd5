# Copyright 2026 The Matchgame Authors.
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

"""Matching game toolkit backed by a C++ core."""

from matchgame._matchgame import (
    BudgetExceededError,
    StrategyParseError,
    audit,
    certificate,
    complete_lemma1,
    count_colorings,
    cross_component_matching,
    enumerate_matchings,
    evaluate,
    exact_omega_d,
    figure_strategy,
    first_counterexample,
    hill_climb,
    lemma1_strategy,
    normalize_strategy,
    output_width,
    quantum_distribution,
    quantum_verify,
    run_cli,
    wins_round,
)

__all__ = [
    "BudgetExceededError",
    "StrategyParseError",
    "audit",
    "certificate",
    "complete_lemma1",
    "count_colorings",
    "cross_component_matching",
    "enumerate_matchings",
    "evaluate",
    "exact_omega_d",
    "figure_strategy",
    "first_counterexample",
    "hill_climb",
    "lemma1_strategy",
    "normalize_strategy",
    "output_width",
    "quantum_distribution",
    "quantum_verify",
    "run_cli",
    "wins_round",
]
