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

#ifndef ENTMETER_RANDOM_HPP_
#define ENTMETER_RANDOM_HPP_

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "entmeter/state.hpp"

namespace entmeter {

// All randomness flows through an explicitly passed engine; nothing in the
// library seeds from global state.
using Rng = std::mt19937_64;

// Complex matrix with i.i.d. standard complex Gaussian entries.
Eigen::MatrixXcd ginibre_matrix(int rows, int cols, Rng& rng);

// Haar-distributed unitary: QR of a Ginibre matrix with the phases of the
// diagonal of R fixed so the distribution is exactly invariant.
Eigen::MatrixXcd haar_random_unitary(int dim, Rng& rng);

// Normalized Haar-random pure state on the given layout.
StateVector random_state(const LegLayout& layout, Rng& rng);

// Unit-trace PSD matrix of the requested rank (1 <= rank <= dim).
DensityOperator random_density(const LegLayout& layout, int rank, Rng& rng);

}  // namespace entmeter

#endif  // ENTMETER_RANDOM_HPP_
