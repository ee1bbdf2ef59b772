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

#ifndef ENTMETER_TOLERANCES_HPP_
#define ENTMETER_TOLERANCES_HPP_

#include <cstdint>

namespace entmeter {
namespace tol {

// Largest total dimension for which dense operator matrices may be formed.
// Multi-copy workloads above this cap must stay on the matrix-free path.
inline constexpr std::int64_t kDenseDimCap = 4096;

// Hermiticity of a density operator, max |rho - rho^dagger| entrywise.
inline constexpr double kDensityHermiticity = 1e-12;

// Hermiticity required of operators fed to the eigensolver.
inline constexpr double kOperatorHermiticity = 1e-10;

// Eigenvalues of a nominally PSD matrix above this floor are clamped to 0;
// anything below it is treated as a genuinely indefinite input.
inline constexpr double kPsdEigenvalueFloor = -1e-8;

// Expectation values of the shipped observables are real up to roundoff.
inline constexpr double kExpectationImagTol = 1e-8;

// Monotone evaluation: expectations in [-kNegativeClamp, 0) clamp to 0,
// anything more negative is a mis-built observable.
inline constexpr double kNegativeClamp = 1e-10;

// Multi-term expectations cancel to the true value plus O(eps) residue; a
// fractional root would inflate that residue (e.g. 1e-16 -> cbrt -> 5e-6),
// so magnitudes at the cancellation noise floor snap to exactly 0.
inline constexpr double kExpectationNoiseFloor = 1e-13;

// Zero eigenvalues of the spin-flipped overlap matrix carry O(eps) noise
// whose square root would otherwise pollute the Wootters formula.
inline constexpr double kSpectrumNoiseFloor = 1e-13;

// Norm slack accepted when validating states loaded from files.
inline constexpr double kNormSlack = 1e-9;

}  // namespace tol
}  // namespace entmeter

#endif  // ENTMETER_TOLERANCES_HPP_
