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

#ifndef ENTMETER_MIXED_BOUNDS_HPP_
#define ENTMETER_MIXED_BOUNDS_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "entmeter/monotones.hpp"
#include "entmeter/observable.hpp"
#include "entmeter/random.hpp"
#include "entmeter/state.hpp"

namespace entmeter {

// Configuration of the two-copy concurrence bound family: a weighted
// subtraction of mixed symmetric/antisymmetric projector products from the
// doubly antisymmetric one. The second weight is always 1 - alpha1.
struct BoundConfig {
  double alpha1 = 0.5;
  Normalization normalization = Normalization::kCalibrated;
  bool clamp = true;

  double alpha2() const { return 1.0 - alpha1; }
};

struct BoundReport {
  double bound = 0.0;
  double raw_trace = 0.0;
  double alpha1 = std::numeric_limits<double>::quiet_NaN();  // NaN -> null
  std::optional<double> oracle;
  bool certified = false;
  std::int64_t violations = 0;

  // Extras populated by simulated experiments.
  std::optional<double> estimate;
  std::optional<double> std_error;
  std::optional<double> bound_estimate;
  std::vector<double> copy_oracles;
  std::optional<bool> geometric_mean_ok;
};

struct AuditReport {
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  bool certified = false;
  double alpha1 = std::numeric_limits<double>::quiet_NaN();
};

// Two-copy spec with terms (s², -s²·α₁, -s²·α₂), s the concurrence
// calibration constant, so that the rooted trace saturates on pure states.
// Subsystem labels A, B; rebind for other layouts.
ObservableSpec v_operator(const BoundConfig& config);

// sqrt(max(0, Tr ρ⊗ρ V)); with clamp off, the signed root of the raw trace.
// The report carries the raw trace either way, plus the Wootters oracle on
// two-qubit inputs.
BoundReport concurrence_lower_bound(const DensityOperator& rho,
                                    const BoundConfig& config = {});

// Two-copy expectation of the mixing diagnostic; equals
// ((Tr ρ)² - Tr ρ²)/2 exactly.
double purity_deficit(const DensityOperator& rho);

// The diagnostic's observable on the given subsystem labels: one half of
// identity minus the full-copy exchange, expanded into projector factors.
ObservableSpec purity_deficit_spec(const std::vector<std::string>& subsystems);

// Samples n-tuples of subnormalized random pure states and checks that the
// product of monotone values dominates the tuple expectation of the spec.
// The certificate is granted iff no margin falls below -1e-10.
AuditReport inequality_audit(
    const ObservableSpec& spec,
    const std::function<double(const StateVector&)>& pure_monotone,
    const LegLayout& single_copy, std::int64_t n_trials, Rng& rng);

// (max(0, Tr ρ^⊗n spec))^{1/n}. Carries no validity claim unless an audit
// certificate for the spec is supplied.
BoundReport generic_bound(const DensityOperator& rho,
                          const ObservableSpec& spec, int n,
                          const std::optional<AuditReport>& certificate =
                              std::nullopt);

// (max(0, Tr(ρ₁⊗...⊗ρₙ) spec))^{1/n} for possibly distinct copies; reduces
// to generic_bound when all copies coincide.
double geometric_mean_bound(const std::vector<DensityOperator>& rhos,
                            const ObservableSpec& spec, bool clamp = true);

}  // namespace entmeter

#endif  // ENTMETER_MIXED_BOUNDS_HPP_
