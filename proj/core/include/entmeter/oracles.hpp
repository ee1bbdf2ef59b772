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

#ifndef ENTMETER_ORACLES_HPP_
#define ENTMETER_ORACLES_HPP_

#include <functional>
#include <vector>

#include "entmeter/random.hpp"
#include "entmeter/state.hpp"

namespace entmeter {

// Closed-form reference quantities. These are computed along completely
// independent routes from the multi-copy expectation machinery and exist to
// certify it; keep them free of that machinery.

// Two-qubit concurrence C = max(0, l1 - l2 - l3 - l4), the li being the
// descending square roots of the eigenvalues of sqrt(rho)·rho_tilde·sqrt(rho)
// with rho_tilde = (sy ⊗ sy) conj(rho) (sy ⊗ sy). Hermitian route only.
double wootters_concurrence(const DensityOperator& rho);

// Residual three-party entanglement of a 3-qubit pure state, evaluated as
// four times the absolute Cayley hyperdeterminant of the amplitude tensor.
double ckw_tangle(const StateVector& psi);

enum class GConvention {
  // d · (Π mu_i)^{1/d}, mu_i the reduced-density eigenvalues; maximal -> 1.
  kNormalized,
  // (Π l_i)^{1/d}, l_i the Schmidt coefficients themselves.
  kSchmidtGeometric,
};

// Geometric-mean entanglement of a bipartite d×d pure state from its Schmidt
// spectrum; exactly 0 when the Schmidt rank is deficient.
double schmidt_g_concurrence(const StateVector& psi,
                             GConvention convention = GConvention::kNormalized);

// Sum of |negative eigenvalues| of the partial transpose over block_a.
double negativity(const DensityOperator& rho, const std::vector<int>& block_a);

// Von Neumann entropy of the reduced state on block_a (natural log).
double reduced_entropy(const StateVector& psi, const std::vector<int>& block_a);

// One explored point of the convex-roof search: ensemble {psi_i} induced by
// a mixing matrix with orthonormal columns acting on the eigenensemble.
struct DecompositionCandidate {
  Eigen::MatrixXcd mixing;           // m x r, orthonormal columns
  Eigen::VectorXd base_weights;      // r eigenvalues of rho, descending
  Eigen::MatrixXcd base_vectors;     // dim x r matching eigenvectors

  // Subnormalized members psi_i = Σ_j U_ij sqrt(mu_j) |e_j>.
  std::vector<StateVector> ensemble(const LegLayout& layout) const;
};

struct RoofSearchOptions {
  int ensemble_size = 0;   // 0 -> rank + 2
  int iterations = 10000;  // total proposal budget across restarts
  int restarts = 5;
  double initial_step = 0.3;
};

struct RoofSearchResult {
  double value = 0.0;
  DecompositionCandidate best;
  int proposals = 0;
};

// Stochastic upper approximation of the convex roof of a pure-state monotone:
// random restarts over mixing matrices plus greedy refinement by perturbation
// and re-orthonormalization. The result can only overestimate the roof.
// pure_monotone must accept subnormalized states homogeneously.
RoofSearchResult convex_roof_search(
    const DensityOperator& rho,
    const std::function<double(const StateVector&)>& pure_monotone,
    const RoofSearchOptions& options, Rng& rng);

}  // namespace entmeter

#endif  // ENTMETER_ORACLES_HPP_
