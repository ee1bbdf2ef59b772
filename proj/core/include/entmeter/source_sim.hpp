// Copyright 2026 The entmeter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTMETER_SOURCE_SIM_HPP_
#define ENTMETER_SOURCE_SIM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entmeter/mixed_bounds.hpp"
#include "entmeter/observable.hpp"
#include "entmeter/random.hpp"
#include "entmeter/state.hpp"

namespace entmeter {

// Imperfect source: emits |psi_i> with probability p_i, independently per
// emission round.
struct WeightedState {
  double probability = 0.0;
  StateVector state;
};

struct SourceModel {
  std::vector<WeightedState> ensemble;
  std::string label;

  // Probabilities sum to 1 within 1e-12; members normalized, same layout.
  void validate() const;
};

enum class ChannelKind { kDepolarizing, kDephasing };

// Local storage decoherence, one Kraus set per subsystem dimension, applied
// one subsystem at a time. The per-copy delay schedule rides along:
//   empty        -> sequential source, copy i of n waits n-1-i steps
//   one entry    -> every copy waits that constant (parallel sources)
//   n entries    -> explicit per-copy delays
struct StorageChannel {
  ChannelKind kind = ChannelKind::kDepolarizing;
  double q = 0.0;
  std::vector<int> steps;

  // Kraus operators for one d-dimensional subsystem; ΣK†K = 1.
  std::vector<Eigen::MatrixXcd> kraus_for(int dim) const;
  int steps_for_copy(int copy, int n_copies) const;
};

StorageChannel depolarizing_channel(double q);
StorageChannel dephasing_channel(double q);

struct ExperimentConfig {
  SourceModel source;
  StorageChannel channel;
  int n_copies = 2;
  ObservableSpec observable;
  // Recorded when the observable came from the two-copy bound family.
  std::optional<double> alpha1;
  std::int64_t shots = 1;
  std::uint64_t seed = 0;
};

// Σ p_i |psi_i><psi_i|.
DensityOperator effective_density(const SourceModel& source);

// Ensemble average of n independent emissions, Σ p_{i1}...p_{in}
// |psi_i1..psi_in><...|; equals effective_density^⊗n.
DensityOperator ensemble_nfold_average(const SourceModel& source, int n);

// One round of the channel on every subsystem of rho.
DensityOperator apply_channel(const DensityOperator& rho,
                              const StorageChannel& channel);

// steps rounds of the channel.
DensityOperator apply_storage(const DensityOperator& rho,
                              const StorageChannel& channel, int steps);

// The n stored copies: source density with the per-copy delay schedule
// applied (earlier emissions wait longer).
std::vector<DensityOperator> prepare_copies(const ExperimentConfig& config);

struct ShotEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t shots = 0;
};

// Unbiased shot estimator of Tr[(⊗rho_i) observable]. Product-of-projector
// specs whose factors occupy disjoint leg pairs are sampled factor-wise
// (the factors commute); anything else falls back to the observable's dense
// eigendecomposition, subject to the dense cap.
ShotEstimate sample_expectation(const ObservableSpec& observable,
                                const std::vector<DensityOperator>& copies,
                                std::int64_t shots, Rng& rng);

// Full protocol: prepare copies, estimate the trace by sampling, root and
// clamp, attach oracle values and the geometric-mean check (two-qubit only).
BoundReport run_experiment(const ExperimentConfig& config);

}  // namespace entmeter

#endif  // ENTMETER_SOURCE_SIM_HPP_
