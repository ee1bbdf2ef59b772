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

#ifndef ENTMETER_NAMED_STATES_HPP_
#define ENTMETER_NAMED_STATES_HPP_

#include <optional>
#include <string>

#include "entmeter/state.hpp"

namespace entmeter {

// (|01> - |10>)/sqrt(2) on subsystems A, B.
StateVector singlet_state();

// (|000> + |111>)/sqrt(2) on A, B, C.
StateVector ghz_state();

// (|001> + |010> + |100>)/sqrt(3) on A, B, C.
StateVector w_state();

// (1/sqrt(d)) Σ |jj> on A, B of dimension d.
StateVector maxent_state(int d);

// p |singlet><singlet| + (1-p)/4 · identity.
DensityOperator werner_state(double p);

// Parsed builtin: exactly one of pure/density is set.
struct NamedState {
  std::optional<StateVector> pure;
  std::optional<DensityOperator> density;
};

// Resolves "singlet", "ghz", "w", "maxent3", "maxent4", "werner:p".
// Throws std::invalid_argument for unknown names.
NamedState make_named_state(const std::string& name);

}  // namespace entmeter

#endif  // ENTMETER_NAMED_STATES_HPP_
