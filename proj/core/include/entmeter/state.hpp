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

#ifndef ENTMETER_STATE_HPP_
#define ENTMETER_STATE_HPP_

#include <Eigen/Dense>

#include "entmeter/layout.hpp"

namespace entmeter {

// Pure state: flat amplitude vector plus the leg layout it factorizes over.
// Amplitudes are row-major over the legs, first leg slowest.
struct StateVector {
  Eigen::VectorXcd amplitudes;
  LegLayout layout;

  StateVector() = default;
  StateVector(Eigen::VectorXcd amps, LegLayout lay);

  double norm() const { return amplitudes.norm(); }

  // Boundary-level checks (file IO, factories): vector length matches the
  // layout and the norm lies in (0, 1] up to slack. Subnormalized vectors
  // are legal; they carry ensemble weight.
  void validate() const;
};

// Mixed state as a dense matrix over the same flattening as StateVector.
struct DensityOperator {
  Eigen::MatrixXcd matrix;
  LegLayout layout;

  DensityOperator() = default;
  DensityOperator(Eigen::MatrixXcd mat, LegLayout lay);

  double trace_real() const { return matrix.trace().real(); }

  // Hermiticity within 1e-12, trace in (0, 1], eigenvalues >= -1e-10.
  // The spectrum check solves an eigenproblem; keep this at boundaries.
  void validate() const;
};

// |psi><psi| with the same layout.
DensityOperator pure_density(const StateVector& psi);

}  // namespace entmeter

#endif  // ENTMETER_STATE_HPP_
