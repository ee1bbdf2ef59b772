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

#ifndef ENTMETER_MONOTONES_HPP_
#define ENTMETER_MONOTONES_HPP_

#include <string>
#include <vector>

#include "entmeter/observable.hpp"
#include "entmeter/state.hpp"

namespace entmeter {

enum class Normalization {
  kCalibrated,  // oracle-anchored scale (singlet/GHZ/maximally entangled = 1)
  kRaw,         // bare n-copy expectation, no root, no calibration
};

// A pure-state entanglement monotone: the n-th root of an n-copy invariant
// observable expectation, scaled by a calibration constant anchored to one
// closed-form oracle value.
struct MonotoneDefinition {
  std::string name;
  int n_copies = 0;
  LegLayout single_copy;        // canonical one-copy layout
  std::vector<int> required_dims;  // empty: any dims accepted
  ObservableSpec observable;    // canonical subsystem labels
  double calibration = 1.0;
};

// Shipped definitions. Calibrations are computed once, procedurally, by
// matching the anchor state (singlet, GHZ, maximally entangled d-level) to
// its oracle value, then cached.
const MonotoneDefinition& concurrence_definition();
const MonotoneDefinition& tangle_definition();
const MonotoneDefinition& gconc3_definition();
const MonotoneDefinition& gconc4_definition();

// Lookup by CLI name {concurrence, tangle, gconc3, gconc4}.
const MonotoneDefinition& monotone_by_name(const std::string& name);

// Bare n-copy expectation of the monotone's observable on psi (pre-root,
// uncalibrated). psi is a single-copy state; subnormalized inputs scale
// homogeneously.
double raw_expectation(const MonotoneDefinition& definition,
                       const StateVector& psi);

// calibration · expectation^{1/n}. Expectations in [-1e-10, 0) clamp to 0;
// below that the observable was mis-built and this throws. Magnitudes at
// the cancellation noise floor snap to exactly 0 before rooting.
double evaluate_monotone(const MonotoneDefinition& definition,
                         const StateVector& psi,
                         Normalization normalization = Normalization::kCalibrated);

// Convenience forms of the four shipped monotones.
double concurrence_pure(const StateVector& psi);   // any bipartite dims
double tangle_pure(const StateVector& psi);        // three qubits
double g_concurrence_3x3(const StateVector& psi);  // bipartite 3×3
double g_concurrence_4x4(const StateVector& psi);  // bipartite 4×4, matrix-free

}  // namespace entmeter

#endif  // ENTMETER_MONOTONES_HPP_
