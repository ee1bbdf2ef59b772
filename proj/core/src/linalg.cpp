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

#include "entmeter/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entmeter/tolerances.hpp"

namespace entmeter {

std::pair<Eigen::VectorXd, Eigen::MatrixXcd> hermitian_eigensystem(
    const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  }
  const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol::kOperatorHermiticity) {
    throw std::invalid_argument(
        "hermitian_eigensystem: not Hermitian, deviation " +
        std::to_string(dev));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& rho) {
  auto [vals, vecs] = hermitian_eigensystem(rho);
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < tol::kPsdEigenvalueFloor) {
      throw std::invalid_argument("psd_sqrt: negative eigenvalue " +
                                  std::to_string(vals(i)));
    }
    vals(i) = std::sqrt(std::max(0.0, vals(i)));
  }
  return vecs * vals.asDiagonal() * vecs.adjoint();
}

}  // namespace entmeter
