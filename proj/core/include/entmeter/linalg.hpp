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

#ifndef ENTMETER_LINALG_HPP_
#define ENTMETER_LINALG_HPP_

#include <utility>

#include <Eigen/Dense>

namespace entmeter {

// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian
// operator. Rejects inputs that are not Hermitian within 1e-10.
std::pair<Eigen::VectorXd, Eigen::MatrixXcd> hermitian_eigensystem(
    const Eigen::MatrixXcd& h);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-1e-8, 0) clamp to 0; anything below throws.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& rho);

}  // namespace entmeter

#endif  // ENTMETER_LINALG_HPP_
