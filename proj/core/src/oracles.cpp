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

#include "entmeter/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entmeter/linalg.hpp"
#include "entmeter/tensor.hpp"
#include "entmeter/tolerances.hpp"

namespace entmeter {

namespace {

// Schmidt rank below which a d×d state has zero G-concurrence.
constexpr double kSchmidtRankTol = 1e-12;

bool is_two_qubit(const LegLayout& layout) {
  return layout.n_copies() == 1 && layout.leg_count() == 2 &&
         layout.leg(0).dim == 2 && layout.leg(1).dim == 2;
}

}  // namespace

double wootters_concurrence(const DensityOperator& rho) {
  if (!is_two_qubit(rho.layout)) {
    throw std::invalid_argument(
        "wootters_concurrence: input must be a two-qubit state");
  }
  Eigen::MatrixXcd yy = Eigen::MatrixXcd::Zero(4, 4);
  // sy ⊗ sy in the shared |00>,|01>,|10>,|11> flattening.
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  const Eigen::MatrixXcd flipped = yy * rho.matrix.conjugate() * yy;
  const Eigen::MatrixXcd root = psd_sqrt(rho.matrix);
  const Eigen::MatrixXcd m = root * flipped * root;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  Eigen::VectorXd eigs = solver.eigenvalues();
  // The spectrum contains exact zeros whenever rho is rank deficient; their
  // numerical residue must not survive the square root.
  std::vector<double> lambda;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    const double e = eigs(i) > tol::kSpectrumNoiseFloor ? eigs(i) : 0.0;
    lambda.push_back(std::sqrt(e));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double ckw_tangle(const StateVector& psi) {
  const LegLayout& layout = psi.layout;
  if (layout.n_copies() != 1 || layout.leg_count() != 3 ||
      layout.leg(0).dim != 2 || layout.leg(1).dim != 2 ||
      layout.leg(2).dim != 2) {
    throw std::invalid_argument("ckw_tangle: input must be a 3-qubit state");
  }
  const auto a = [&](int i, int j, int k) {
    return psi.amplitudes(4 * i + 2 * j + k);
  };
  using cd = std::complex<double>;
  const cd d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const cd d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const cd d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  const cd hyperdet = d1 - 2.0 * d2 + 4.0 * d3;
  return 4.0 * std::abs(hyperdet);
}

double schmidt_g_concurrence(const StateVector& psi, GConvention convention) {
  const LegLayout& layout = psi.layout;
  if (layout.n_copies() != 1 || layout.leg_count() != 2 ||
      layout.leg(0).dim != layout.leg(1).dim) {
    throw std::invalid_argument(
        "schmidt_g_concurrence: input must be a bipartite d×d state");
  }
  const int d = layout.leg(0).dim;
  const Eigen::VectorXd lambda = schmidt_coefficients(psi, {0});
  if (lambda(d - 1) < kSchmidtRankTol) return 0.0;

  if (convention == GConvention::kSchmidtGeometric) {
    double logp = 0.0;
    for (int i = 0; i < d; ++i) logp += std::log(lambda(i));
    return std::exp(logp / d);
  }
  double logp = 0.0;
  for (int i = 0; i < d; ++i) logp += 2.0 * std::log(lambda(i));
  return d * std::exp(logp / d);
}

double negativity(const DensityOperator& rho, const std::vector<int>& block_a) {
  const DensityOperator pt = partial_transpose(rho, block_a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (pt.matrix + pt.matrix.adjoint()), Eigen::EigenvaluesOnly);
  double neg = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    neg += std::max(0.0, -solver.eigenvalues()(i));
  }
  return neg;
}

double reduced_entropy(const StateVector& psi,
                       const std::vector<int>& block_a) {
  const Eigen::VectorXd lambda = schmidt_coefficients(psi, block_a);
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double mu = lambda(i) * lambda(i);
    if (mu > 1e-15) s -= mu * std::log(mu);
  }
  return s;
}

std::vector<StateVector> DecompositionCandidate::ensemble(
    const LegLayout& layout) const {
  std::vector<StateVector> out;
  const Eigen::Index m = mixing.rows();
  const Eigen::VectorXd scale = base_weights.cwiseSqrt();
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::VectorXcd coeffs =
        mixing.row(i).transpose().cwiseProduct(scale.cast<std::complex<double>>());
    out.emplace_back(base_vectors * coeffs, layout);
  }
  return out;
}

namespace {

// Thin orthonormal m×r frame from the QR of a square-integrable matrix.
Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& g) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  return qr.householderQ() *
         Eigen::MatrixXcd::Identity(g.rows(), g.cols());
}

double ensemble_cost(const DecompositionCandidate& cand,
                     const LegLayout& layout,
                     const std::function<double(const StateVector&)>& m) {
  double total = 0.0;
  for (const StateVector& psi : cand.ensemble(layout)) total += m(psi);
  return total;
}

}  // namespace

RoofSearchResult convex_roof_search(
    const DensityOperator& rho,
    const std::function<double(const StateVector&)>& pure_monotone,
    const RoofSearchOptions& options, Rng& rng) {
  auto [vals, vecs] = hermitian_eigensystem(
      0.5 * (rho.matrix + rho.matrix.adjoint()));

  // Keep the significant part of the spectrum, descending.
  const double cutoff = 1e-12 * std::max(1.0, vals.maxCoeff());
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = vals.size(); i-- > 0;) {
    if (vals(i) > cutoff) kept.push_back(i);
  }
  const int r = static_cast<int>(kept.size());
  if (r == 0) {
    throw std::invalid_argument("convex_roof_search: state has zero trace");
  }
  Eigen::VectorXd weights(r);
  Eigen::MatrixXcd vectors(rho.matrix.rows(), r);
  for (int j = 0; j < r; ++j) {
    weights(j) = vals(kept[static_cast<size_t>(j)]);
    vectors.col(j) = vecs.col(kept[static_cast<size_t>(j)]);
  }

  const int m = options.ensemble_size > 0 ? options.ensemble_size : r + 2;
  if (m < r) {
    throw std::invalid_argument(
        "convex_roof_search: ensemble size below state rank");
  }
  if (options.iterations < 1 || options.restarts < 1) {
    throw std::invalid_argument(
        "convex_roof_search: iterations and restarts must be >= 1");
  }

  RoofSearchResult result;
  result.value = std::numeric_limits<double>::infinity();

  const int budget_per_restart =
      std::max(1, options.iterations / options.restarts);
  int proposals = 0;
  for (int restart = 0; restart < options.restarts; ++restart) {
    DecompositionCandidate cand;
    cand.base_weights = weights;
    cand.base_vectors = vectors;
    cand.mixing = orthonormal_columns(ginibre_matrix(m, r, rng));
    double cost = ensemble_cost(cand, rho.layout, pure_monotone);
    double step = options.initial_step;

    for (int it = 0; it < budget_per_restart; ++it) {
      ++proposals;
      const Eigen::MatrixXcd trial = orthonormal_columns(
          cand.mixing + step * ginibre_matrix(m, r, rng));
      DecompositionCandidate trial_cand = cand;
      trial_cand.mixing = trial;
      const double trial_cost =
          ensemble_cost(trial_cand, rho.layout, pure_monotone);
      if (trial_cost < cost) {
        cand.mixing = trial;
        cost = trial_cost;
        step = std::min(step * 1.1, 1.0);
      } else {
        step *= 0.95;
        if (step < 1e-8) break;
      }
    }
    if (cost < result.value) {
      result.value = cost;
      result.best = cand;
    }
  }
  result.proposals = proposals;
  return result;
}

}  // namespace entmeter
