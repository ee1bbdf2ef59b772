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

#ifndef ENTMETER_TENSOR_HPP_
#define ENTMETER_TENSOR_HPP_

#include <vector>

#include <Eigen/Dense>

#include "entmeter/state.hpp"

namespace entmeter {

// Dense Kronecker products under the row-major, first-factor-slowest
// flattening shared by all layouts.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

// |psi>^{\otimes n} with copies indexed 0..n-1. psi must be single-copy.
StateVector nfold_copy(const StateVector& psi, int n);

// Tensor product of independent single-copy states; factor i becomes copy i.
// All factors must share the same subsystem structure.
StateVector tensor_product(const std::vector<StateVector>& factors);

// Reorders the legs of psi; new_order[i] is the old index of new leg i.
StateVector reorder_legs(const StateVector& psi,
                         const std::vector<int>& new_order);

// Applies a permutation of whole copies: the amplitudes of copy c move to
// copy perm[c]. All copies must carry identical subsystem structure.
StateVector permute_copies(const StateVector& psi,
                           const std::vector<int>& perm);

// Traces out every leg not listed in `keep` (indices into rho's layout).
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep);

// Applies a square operator to the listed legs (matrix-free: no operator of
// the full dimension is formed). op acts on the tensor product of the target
// legs in the order given.
StateVector apply_to_legs(const Eigen::MatrixXcd& op,
                          const std::vector<int>& targets,
                          const StateVector& psi);
Eigen::VectorXcd apply_to_legs(const Eigen::MatrixXcd& op,
                               const std::vector<int>& targets,
                               const Eigen::VectorXcd& amplitudes,
                               const LegLayout& layout);

// Dense embedding op ⊗ 1_rest reordered onto the full layout. Guarded by the
// dense dimension cap.
Eigen::MatrixXcd embed_on_legs(const Eigen::MatrixXcd& op,
                               const std::vector<int>& targets,
                               const LegLayout& layout);

// Schmidt coefficients (descending, Σλᵢ² = norm²) across the bipartition
// (block_a | complement). block_a must be a proper nonempty leg subset.
Eigen::VectorXd schmidt_coefficients(const StateVector& psi,
                                     const std::vector<int>& block_a);

// Reduced density operator on block_a of a pure state.
DensityOperator reduced_density(const StateVector& psi,
                                const std::vector<int>& block_a);

// Transposes the listed legs (partial transpose); Hermiticity is preserved.
DensityOperator partial_transpose(const DensityOperator& rho,
                                  const std::vector<int>& transposed);

}  // namespace entmeter

#endif  // ENTMETER_TENSOR_HPP_
