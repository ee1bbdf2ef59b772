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

#ifndef ENTMETER_OBSERVABLE_HPP_
#define ENTMETER_OBSERVABLE_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "entmeter/random.hpp"
#include "entmeter/state.hpp"

namespace entmeter {

enum class FactorKind { kSym, kAntisym, kIdentity };

// One projector factor of an observable term: a symmetric or antisymmetric
// projector across two copies of one subsystem, or an explicit identity on
// a single copy of it. Legs not covered by any factor are implicit identity.
struct ProjectorFactor {
  FactorKind kind = FactorKind::kIdentity;
  std::string subsystem;
  // Two copy indices for SYM/ANTISYM, one for IDENTITY.
  std::vector<int> copies;

  bool operator==(const ProjectorFactor&) const = default;
};

struct ObservableTerm {
  double coeff = 0.0;
  std::vector<ProjectorFactor> factors;

  bool operator==(const ObservableTerm&) const = default;
};

// Symbolic multi-copy observable: a real linear combination of products of
// projector factors. Stored symbolically so that large-dimension cases can
// be evaluated without ever forming the dense operator.
struct ObservableSpec {
  int n_copies = 0;
  std::vector<ObservableTerm> terms;

  // Factor well-formedness against a concrete multi-copy layout: copy
  // indices in range and distinct, subsystem labels present, and within
  // each term every leg covered at most once.
  void validate(const LegLayout& layout) const;

  bool operator==(const ObservableSpec&) const = default;
};

// Permutation operator on n copies of a d-level system: basis state
// |i_0 ... i_{n-1}> maps to the state whose copy perm[c] holds i_c.
Eigen::MatrixXcd permutation_operator(const std::vector<int>& perm, int d,
                                      int n);

// Projectors onto the symmetric / antisymmetric subspace of h ⊗ h,
// assembled as (1 ± exchange)/2.
Eigen::MatrixXcd sym_projector(int d);
Eigen::MatrixXcd antisym_projector(int d);

// Dense realization of a spec on the given layout. Guarded by the dense
// dimension cap; large cases must use the expectation overloads, which are
// matrix-free throughout.
Eigen::MatrixXcd realize(const ObservableSpec& spec, const LegLayout& layout);

// Sum over terms of coeff * (product of factors) applied to a multi-copy
// state, without forming any full-dimension operator.
StateVector apply_observable(const ObservableSpec& spec,
                             const StateVector& psi);

// <Psi| spec |Psi> for a multi-copy pure state.
double expectation(const ObservableSpec& spec, const StateVector& multi_copy);

// Expectation on a product of independent per-copy pure states.
double expectation(const ObservableSpec& spec,
                   const std::vector<StateVector>& copies);

// Tr[(rho_0 ⊗ ... ⊗ rho_{n-1}) spec], evaluated matrix-free by summing
// over tuples of eigenvectors of the factors.
double expectation(const ObservableSpec& spec,
                   const std::vector<DensityOperator>& copies);

// Max over samples of ||U A U† − A||_∞ with U a product of one Haar unitary
// per subsystem, repeated across copies. Dense comparison below a small
// dimension threshold, random-probe deviation above it.
double twirl_invariance_check(const ObservableSpec& spec,
                              const LegLayout& layout, int n_samples,
                              Rng& rng);

// Same check for an explicit dense operator (negative controls).
double twirl_invariance_check(const Eigen::MatrixXcd& op,
                              const LegLayout& layout, int n_samples,
                              Rng& rng);

// Rewrites subsystem labels (parallel arrays from -> to), e.g. to bind a
// canonically labeled observable to a user layout.
ObservableSpec rebind_subsystems(const ObservableSpec& spec,
                                 const std::vector<std::string>& from,
                                 const std::vector<std::string>& to);

}  // namespace entmeter

#endif  // ENTMETER_OBSERVABLE_HPP_
