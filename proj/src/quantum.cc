// Copyright 2026 The Matchgame Authors.
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

#include "matchgame/quantum.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace matchgame {

namespace {

constexpr double kSupportThreshold = 1e-12;
constexpr double kDropThreshold = 1e-15;

void require_power_of_two(const GameInstance& inst) {
  if (!std::has_single_bit(static_cast<unsigned>(inst.input_size()))) {
    throw UnsupportedInstanceError("the entangled strategy is implemented only for m a power of 2, got m = " +
                                   std::to_string(inst.input_size()));
  }
}

}  // namespace

double StateVector::norm_squared() const {
  double s = 0;
  for (const auto& z : amps_) s += std::norm(z);
  return s;
}

void StateVector::apply_alice_phase(const BitString& x) {
  if (x.width() != side_) throw std::invalid_argument("phase string must have one bit per level");
  for (int i = 0; i < side_; ++i) {
    if (!x.bit(i)) continue;
    for (int j = 0; j < side_; ++j) at(i, j) = -at(i, j);
  }
}

void StateVector::apply_alice_hadamard() {
  if (!std::has_single_bit(static_cast<unsigned>(side_))) throw UnsupportedInstanceError("Hadamard needs 2^n levels");
  for (int h = 1; h < side_; h <<= 1) {
    for (int i = 0; i < side_; ++i) {
      if (i & h) continue;
      for (int j = 0; j < side_; ++j) {
        Amplitude u = at(i, j);
        Amplitude v = at(i | h, j);
        at(i, j) = u + v;
        at(i | h, j) = u - v;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(side_));
  for (auto& z : amps_) z *= scale;
}

void StateVector::project_alice(int a) {
  for (int i = 0; i < side_; ++i) {
    if (i == a) continue;
    for (int j = 0; j < side_; ++j) at(i, j) = 0;
  }
}

void StateVector::project_bob(const std::vector<double>& basis) {
  if (basis.size() != static_cast<std::size_t>(side_)) throw std::invalid_argument("basis vector has wrong length");
  for (int i = 0; i < side_; ++i) {
    Amplitude overlap = 0;
    for (int j = 0; j < side_; ++j) overlap += basis[static_cast<std::size_t>(j)] * at(i, j);
    for (int j = 0; j < side_; ++j) at(i, j) = basis[static_cast<std::size_t>(j)] * overlap;
  }
}

StateVector shared_state(const GameInstance& inst) {
  require_power_of_two(inst);
  const int m = inst.input_size();
  StateVector psi(m);
  const double amp = 1.0 / std::sqrt(static_cast<double>(m));
  for (int i = 0; i < m; ++i) psi.at(i, i) = amp;
  return psi;
}

BitString quantum_b2(const Edge& edge, int sign, const GameInstance& inst) {
  auto diff = static_cast<std::uint64_t>(edge.lo ^ edge.hi);
  return BitString(inst.output_width(), sign ? (diff & (~diff + 1)) : 0);
}

namespace {

std::vector<double> bob_basis_vector(int m, const Edge& e, int sign) {
  std::vector<double> v(static_cast<std::size_t>(m), 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  v[static_cast<std::size_t>(e.lo)] = r;
  v[static_cast<std::size_t>(e.hi)] = sign ? -r : r;
  return v;
}

// probs[(edge_index * 2 + sign) * m + a]
std::vector<double> outcome_table(const GameInstance& inst, const BitString& x, const PerfectMatching& y,
                                  MeasurementOrder order) {
  require_power_of_two(inst);
  const int m = inst.input_size();
  if (x.width() != m) throw std::invalid_argument("x must have width m");
  if (y.vertex_count() != m) throw std::invalid_argument("matching must be over 0..m-1");

  StateVector psi = shared_state(inst);
  psi.apply_alice_phase(x);
  auto edges = y.edges();
  std::vector<double> probs(edges.size() * 2 * static_cast<std::size_t>(m), 0.0);
  auto slot = [&](std::size_t e, int s, int a) -> double& {
    return probs[(e * 2 + static_cast<std::size_t>(s)) * static_cast<std::size_t>(m) + static_cast<std::size_t>(a)];
  };

  if (order == MeasurementOrder::kBobFirst) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (int s = 0; s < 2; ++s) {
        StateVector after_bob = psi;
        after_bob.project_bob(bob_basis_vector(m, edges[e], s));
        after_bob.apply_alice_hadamard();
        for (int a = 0; a < m; ++a) {
          StateVector branch = after_bob;
          branch.project_alice(a);
          slot(e, s, a) = branch.norm_squared();
        }
      }
    }
  } else {
    StateVector transformed = psi;
    transformed.apply_alice_hadamard();
    for (int a = 0; a < m; ++a) {
      StateVector after_alice = transformed;
      after_alice.project_alice(a);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        for (int s = 0; s < 2; ++s) {
          StateVector branch = after_alice;
          branch.project_bob(bob_basis_vector(m, edges[e], s));
          slot(e, s, a) = branch.norm_squared();
        }
      }
    }
  }
  return probs;
}

OutcomeDistribution to_distribution(const GameInstance& inst, const PerfectMatching& y,
                                    const std::vector<double>& probs) {
  const int m = inst.input_size();
  auto edges = y.edges();
  OutcomeDistribution out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (int s = 0; s < 2; ++s) {
      BitString b2 = quantum_b2(edges[e], s, inst);
      for (int a = 0; a < m; ++a) {
        std::size_t slot = (e * 2 + static_cast<std::size_t>(s)) * static_cast<std::size_t>(m);
        double p = probs[slot + static_cast<std::size_t>(a)];
        if (p > kDropThreshold) {
          out.emplace_back(Outcome{BitString(inst.output_width(), static_cast<std::uint64_t>(a)), edges[e], b2}, p);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Answer draw(const OutcomeDistribution& dist, std::mt19937_64& rng) {
  double u = unit_interval(rng);
  double acc = 0;
  for (const auto& [outcome, p] : dist) {
    acc += p;
    if (u < acc) return Answer{outcome.edge, outcome.a, outcome.b2};
  }
  const Outcome& last = dist.back().first;  // rounding slack at the top end
  return Answer{last.edge, last.a, last.b2};
}

}  // namespace

OutcomeDistribution joint_distribution(const GameInstance& inst, const BitString& x, const PerfectMatching& y,
                                       MeasurementOrder order) {
  return to_distribution(inst, y, outcome_table(inst, x, y, order));
}

Answer sample_round(const GameInstance& inst, const BitString& x, const PerfectMatching& y, std::uint64_t seed) {
  return sample_rounds(inst, x, y, seed, 1).front();
}

std::vector<Answer> sample_rounds(const GameInstance& inst, const BitString& x, const PerfectMatching& y,
                                  std::uint64_t seed, std::uint64_t rounds) {
  OutcomeDistribution dist = joint_distribution(inst, x, y);
  std::mt19937_64 rng(seed);
  std::vector<Answer> out;
  out.reserve(rounds);
  for (std::uint64_t r = 0; r < rounds; ++r) out.push_back(draw(dist, rng));
  return out;
}

QuantumVerification verify_always_wins_report(const GameInstance& inst) {
  require_power_of_two(inst);
  const int m = inst.input_size();
  QuantumVerification report;
  report.verified = true;
  auto matchings = enumerate_matchings(inst);
  for (std::uint64_t xv = 0; xv < inst.alice_input_count(); ++xv) {
    BitString x(m, xv);
    for (const PerfectMatching& y : matchings) {
      ++report.questions;
      auto bob_first = outcome_table(inst, x, y, MeasurementOrder::kBobFirst);
      auto alice_first = outcome_table(inst, x, y, MeasurementOrder::kAliceFirst);
      double total = 0;
      for (std::size_t k = 0; k < bob_first.size(); ++k) {
        total += bob_first[k];
        report.max_order_discrepancy = std::max(report.max_order_discrepancy, std::abs(bob_first[k] - alice_first[k]));
      }
      report.max_normalization_error = std::max(report.max_normalization_error, std::abs(total - 1.0));
      if (!report.verified) continue;
      for (const auto& [outcome, p] : to_distribution(inst, y, bob_first)) {
        if (p <= kSupportThreshold) continue;
        if (!wins_round(inst, Question{x, y}, Answer{outcome.edge, outcome.a, outcome.b2})) {
          report.verified = false;
          report.counterexample = std::make_pair(Question{x, y}, outcome);
          break;
        }
      }
    }
  }
  return report;
}

bool verify_always_wins(const GameInstance& inst) { return verify_always_wins_report(inst).verified; }

}  // namespace matchgame
