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

#include "entmeter/state.hpp"

#include <stdexcept>
#include <string>

#include "entmeter/tolerances.hpp"

namespace entmeter {

StateVector::StateVector(Eigen::VectorXcd amps, LegLayout lay)
    : amplitudes(std::move(amps)), layout(std::move(lay)) {
  if (amplitudes.size() != layout.total_dim()) {
    throw std::invalid_argument(
        "StateVector: amplitude count " + std::to_string(amplitudes.size()) +
        " does not match layout dimension " +
        std::to_string(layout.total_dim()));
  }
}

void StateVector::validate() const {
  if (amplitudes.size() != layout.total_dim()) {
    throw std::invalid_argument("StateVector: length/layout mismatch");
  }
  const double n = norm();
  if (n <= 0.0 || n > 1.0 + tol::kNormSlack) {
    throw std::invalid_argument("StateVector: norm " + std::to_string(n) +
                                " outside (0, 1]");
  }
}

DensityOperator::DensityOperator(Eigen::MatrixXcd mat, LegLayout lay)
    : matrix(std::move(mat)), layout(std::move(lay)) {
  if (matrix.rows() != matrix.cols() ||
      matrix.rows() != layout.total_dim()) {
    throw std::invalid_argument(
        "DensityOperator: matrix shape does not match layout dimension");
  }
}

void DensityOperator::validate() const {
  if (matrix.rows() != matrix.cols() ||
      matrix.rows() != layout.total_dim()) {
    throw std::invalid_argument("DensityOperator: shape/layout mismatch");
  }
  const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::kDensityHermiticity) {
    throw std::invalid_argument("DensityOperator: not Hermitian, deviation " +
                                std::to_string(herm));
  }
  const double tr = trace_real();
  if (tr <= 0.0 || tr > 1.0 + tol::kNormSlack) {
    throw std::invalid_argument("DensityOperator: trace " +
                                std::to_string(tr) + " outside (0, 1]");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix,
                                                         Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol::kNegativeClamp) {
    throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                std::to_string(min_eig));
  }
}

DensityOperator pure_density(const StateVector& psi) {
  return DensityOperator(psi.amplitudes * psi.amplitudes.adjoint(),
                         psi.layout);
}

}  // namespace entmeter
