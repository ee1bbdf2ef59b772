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

#ifndef ENTMETER_SERIALIZATION_HPP_
#define ENTMETER_SERIALIZATION_HPP_

#include <optional>
#include <string>

#include "entmeter/mixed_bounds.hpp"
#include "entmeter/observable.hpp"
#include "entmeter/source_sim.hpp"
#include "entmeter/state.hpp"

namespace entmeter {

// JSON state documents:
//   {"kind": "pure"|"density", "legs": [{"copy": 0, "subsystem": "A",
//    "dim": 2}, ...], "re": [...], "im": [...]}
// Amplitudes/entries are row-major over the legs; doubles round-trip
// exactly (shortest-representation printing).
std::string write_state_json(const StateVector& psi);
std::string write_state_json(const DensityOperator& rho);

struct LoadedState {
  std::optional<StateVector> pure;
  std::optional<DensityOperator> density;
};

// Parses either kind; validates layout, norm/trace and positivity.
// Throws std::invalid_argument on malformed input.
LoadedState read_state_json(const std::string& text);

// {"n_copies": n, "terms": [{"coeff": c, "factors": [{"kind": "ANTISYM",
//  "subsystem": "A", "copies": [0, 1]}, ...]}]}
std::string write_observable_json(const ObservableSpec& spec);
ObservableSpec read_observable_json(const std::string& text);

// {"bound", "raw_trace", "alpha1", "oracle", "certified", "violations"}
// plus the experiment extras when present.
std::string write_bound_report_json(const BoundReport& report);

std::string write_audit_report_json(const AuditReport& report);

// Experiment configuration document; the observable is either a full spec
// under "observable" or the shorthand {"bound_alpha1": x} selecting the
// two-copy bound family.
ExperimentConfig read_experiment_config_json(const std::string& text);
std::string write_experiment_config_json(const ExperimentConfig& config);

}  // namespace entmeter

#endif  // ENTMETER_SERIALIZATION_HPP_
