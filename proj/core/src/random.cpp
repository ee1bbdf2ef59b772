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

#include "entmeter/random.hpp"

#include <cmath>
#include <stdexcept>

namespace entmeter {

Eigen::MatrixXcd ginibre_matrix(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("ginibre_matrix: dimensions must be >= 1");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    }
  }
  return g;
}

Eigen::MatrixXcd haar_random_unitary(int dim, Rng& rng) {
  if (dim < 1) {
    throw std::invalid_argument("haar_random_unitary: dim must be >= 1");
  }
  const Eigen::MatrixXcd g = ginibre_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd r = qr.matrixQR();
  // Without the phase fix the QR decomposition is not unique and Q is
  // biased; dividing out the phases of diag(R) restores exact invariance.
  for (int j = 0; j < dim; ++j) {
    const std::complex<double> rd = r(j, j);
    const double mag = std::abs(rd);
    q.col(j) *= (mag > 0.0) ? (rd / mag) : 1.0;
  }
  return q;
}

StateVector random_state(const LegLayout& layout, Rng& rng) {
  Eigen::MatrixXcd g = ginibre_matrix(static_cast<int>(layout.total_dim()), 1,
                                      rng);
  Eigen::VectorXcd v = g.col(0);
  v /= v.norm();
  return StateVector(std::move(v), layout);
}

DensityOperator random_density(const LegLayout& layout, int rank, Rng& rng) {
  const auto dim = layout.total_dim();
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument("random_density: rank must be in [1, dim]");
  }
  const Eigen::MatrixXcd g =
      ginibre_matrix(static_cast<int>(dim), rank, rng);
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(std::move(m), layout);
}

}  // namespace entmeter
