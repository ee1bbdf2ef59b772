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

#include "entmeter/observable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "entmeter/tensor.hpp"
#include "entmeter/tolerances.hpp"

namespace entmeter {

namespace {

// Below this dimension invariance is checked against the dense realization;
// above it, with random probe vectors.
constexpr std::int64_t kTwirlDenseDim = 256;

// Eigenvalue weights below this contribute nothing to a product-state sum.
constexpr double kWeightCutoff = 1e-14;

void check_factor_shape(const ProjectorFactor& f, int n_copies) {
  const bool pair = f.kind != FactorKind::kIdentity;
  if (pair && (f.copies.size() != 2 || f.copies[0] == f.copies[1])) {
    throw std::invalid_argument(
        "ObservableSpec: SYM/ANTISYM factor needs two distinct copies");
  }
  if (!pair && f.copies.size() != 1) {
    throw std::invalid_argument(
        "ObservableSpec: IDENTITY factor needs exactly one copy");
  }
  for (int c : f.copies) {
    if (c < 0 || c >= n_copies) {
      throw std::invalid_argument("ObservableSpec: copy index " +
                                  std::to_string(c) + " out of range");
    }
  }
  if (f.subsystem.empty()) {
    throw std::invalid_argument("ObservableSpec: empty subsystem label");
  }
}

// Legs a factor touches, as indices into the layout.
std::vector<int> factor_legs(const ProjectorFactor& f,
                             const LegLayout& layout) {
  std::vector<int> legs;
  legs.reserve(f.copies.size());
  for (int c : f.copies) legs.push_back(layout.require(c, f.subsystem));
  return legs;
}

Eigen::MatrixXcd factor_matrix(const ProjectorFactor& f,
                               const LegLayout& layout) {
  const auto legs = factor_legs(f, layout);
  if (f.kind == FactorKind::kIdentity) {
    const int d = layout.leg(legs[0]).dim;
    return Eigen::MatrixXcd::Identity(d, d);
  }
  const int d0 = layout.leg(legs[0]).dim;
  const int d1 = layout.leg(legs[1]).dim;
  if (d0 != d1) {
    throw std::invalid_argument(
        "ObservableSpec: exchange projector requires equal leg dimensions");
  }
  return f.kind == FactorKind::kSym ? sym_projector(d0) : antisym_projector(d0);
}

Eigen::VectorXcd apply_term(const ObservableTerm& term,
                            const Eigen::VectorXcd& amplitudes,
                            const LegLayout& layout) {
  Eigen::VectorXcd v = term.coeff * amplitudes;
  for (const ProjectorFactor& f : term.factors) {
    if (f.kind == FactorKind::kIdentity) continue;
    v = apply_to_legs(factor_matrix(f, layout), factor_legs(f, layout), v,
                      layout);
  }
  return v;
}

Eigen::VectorXcd apply_spec(const ObservableSpec& spec,
                            const Eigen::VectorXcd& amplitudes,
                            const LegLayout& layout) {
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(amplitudes.size());
  for (const ObservableTerm& term : spec.terms) {
    acc += apply_term(term, amplitudes, layout);
  }
  return acc;
}

double real_expectation(const ObservableSpec& spec,
                        const Eigen::VectorXcd& amplitudes,
                        const LegLayout& layout) {
  const std::complex<double> val =
      amplitudes.dot(apply_spec(spec, amplitudes, layout));
  if (std::abs(val.imag()) > tol::kExpectationImagTol *
                                 std::max(1.0, std::abs(val.real()))) {
    throw std::runtime_error(
        "expectation: value has non-negligible imaginary part " +
        std::to_string(val.imag()));
  }
  return val.real();
}

// Per-subsystem dimension map; requires each label to have one dimension.
std::map<std::string, int> subsystem_dims(const LegLayout& layout) {
  std::map<std::string, int> dims;
  for (const Leg& leg : layout.legs()) {
    auto [it, inserted] = dims.insert({leg.subsystem, leg.dim});
    if (!inserted && it->second != leg.dim) {
      throw std::invalid_argument(
          "layout: subsystem " + leg.subsystem +
          " has inconsistent dimensions across copies");
    }
  }
  return dims;
}

}  // namespace

void ObservableSpec::validate(const LegLayout& layout) const {
  if (n_copies < 1) {
    throw std::invalid_argument("ObservableSpec: n_copies must be >= 1");
  }
  if (layout.n_copies() != n_copies) {
    throw std::invalid_argument(
        "ObservableSpec: layout has " + std::to_string(layout.n_copies()) +
        " copies, spec expects " + std::to_string(n_copies));
  }
  for (const ObservableTerm& term : terms) {
    std::set<int> covered;
    for (const ProjectorFactor& f : term.factors) {
      check_factor_shape(f, n_copies);
      for (int leg : factor_legs(f, layout)) {
        if (!covered.insert(leg).second) {
          throw std::invalid_argument(
              "ObservableSpec: leg covered twice within one term");
        }
      }
    }
  }
}

Eigen::MatrixXcd permutation_operator(const std::vector<int>& perm, int d,
                                      int n) {
  if (d < 1) throw std::invalid_argument("permutation_operator: d must be >= 1");
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation_operator: perm size != n");
  }
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[static_cast<size_t>(p)]) {
      throw std::invalid_argument(
          "permutation_operator: not a permutation of 0..n-1");
    }
    hit[static_cast<size_t>(p)] = true;
  }

  std::int64_t total = 1;
  for (int c = 0; c < n; ++c) total *= d;
  // Copy c is the c-th slowest index; its destination stride is d^(n-1-perm[c]).
  std::vector<std::int64_t> dest_stride(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    std::int64_t s = 1;
    for (int k = perm[static_cast<size_t>(c)] + 1; k < n; ++k) s *= d;
    dest_stride[static_cast<size_t>(c)] = s;
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(total, total);
  std::vector<int> digits(static_cast<size_t>(n), 0);
  std::int64_t dest = 0;
  for (std::int64_t src = 0; src < total; ++src) {
    out(dest, src) = 1.0;
    for (int c = n; c-- > 0;) {
      ++digits[static_cast<size_t>(c)];
      dest += dest_stride[static_cast<size_t>(c)];
      if (digits[static_cast<size_t>(c)] < d) break;
      digits[static_cast<size_t>(c)] = 0;
      dest -= d * dest_stride[static_cast<size_t>(c)];
    }
  }
  return out;
}

Eigen::MatrixXcd sym_projector(int d) {
  const auto exchange = permutation_operator({1, 0}, d, 2);
  return 0.5 * (Eigen::MatrixXcd::Identity(exchange.rows(), exchange.cols()) +
                exchange);
}

Eigen::MatrixXcd antisym_projector(int d) {
  const auto exchange = permutation_operator({1, 0}, d, 2);
  return 0.5 * (Eigen::MatrixXcd::Identity(exchange.rows(), exchange.cols()) -
                exchange);
}

Eigen::MatrixXcd realize(const ObservableSpec& spec, const LegLayout& layout) {
  spec.validate(layout);
  const std::int64_t total = layout.total_dim();
  if (total > tol::kDenseDimCap) {
    throw std::invalid_argument(
        "realize: dimension " + std::to_string(total) +
        " exceeds the dense cap; use the matrix-free expectation path");
  }
  Eigen::MatrixXcd out(total, total);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(total);
  for (std::int64_t j = 0; j < total; ++j) {
    basis(j) = 1.0;
    out.col(j) = apply_spec(spec, basis, layout);
    basis(j) = 0.0;
  }
  return out;
}

StateVector apply_observable(const ObservableSpec& spec,
                             const StateVector& psi) {
  spec.validate(psi.layout);
  return StateVector(apply_spec(spec, psi.amplitudes, psi.layout), psi.layout);
}

double expectation(const ObservableSpec& spec, const StateVector& multi_copy) {
  spec.validate(multi_copy.layout);
  return real_expectation(spec, multi_copy.amplitudes, multi_copy.layout);
}

double expectation(const ObservableSpec& spec,
                   const std::vector<StateVector>& copies) {
  if (static_cast<int>(copies.size()) != spec.n_copies) {
    throw std::invalid_argument("expectation: copy-count mismatch");
  }
  return expectation(spec, tensor_product(copies));
}

double expectation(const ObservableSpec& spec,
                   const std::vector<DensityOperator>& copies) {
  if (static_cast<int>(copies.size()) != spec.n_copies) {
    throw std::invalid_argument("expectation: copy-count mismatch");
  }
  for (const DensityOperator& rho : copies) {
    if (rho.layout != copies[0].layout) {
      throw std::invalid_argument("expectation: copies on different layouts");
    }
  }
  const LegLayout full = copies[0].layout.tensor_power(spec.n_copies);
  spec.validate(full);

  // Tr[(⊗ rho_i) A] = Σ over eigenvector tuples of (Π weights)·<e|A|e>.
  struct Factor {
    Eigen::VectorXd weights;
    Eigen::MatrixXcd vectors;
    int kept;
  };
  std::vector<Factor> factors;
  for (const DensityOperator& rho : copies) {
    Eigen::MatrixXcd sym = 0.5 * (rho.matrix + rho.matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    Factor f;
    f.weights = solver.eigenvalues().cwiseMax(0.0);
    f.vectors = solver.eigenvectors();
    f.kept = 0;
    // Eigenvalues ascending: significant weights sit at the back.
    while (f.kept < f.weights.size() &&
           f.weights(f.weights.size() - 1 - f.kept) > kWeightCutoff) {
      ++f.kept;
    }
    if (f.kept == 0) f.kept = 1;
    factors.push_back(std::move(f));
  }

  const int n = spec.n_copies;
  std::vector<int> tuple(static_cast<size_t>(n), 0);
  double acc = 0.0;
  while (true) {
    double weight = 1.0;
    Eigen::VectorXcd prod;
    for (int c = 0; c < n; ++c) {
      const Factor& f = factors[static_cast<size_t>(c)];
      const Eigen::Index col =
          f.weights.size() - 1 - tuple[static_cast<size_t>(c)];
      weight *= f.weights(col);
      prod = (c == 0) ? Eigen::VectorXcd(f.vectors.col(col))
                      : kron(prod, Eigen::VectorXcd(f.vectors.col(col)));
    }
    if (weight > 0.0) {
      acc += weight * real_expectation(spec, prod, full);
    }
    int c = n - 1;
    while (c >= 0) {
      if (++tuple[static_cast<size_t>(c)] <
          factors[static_cast<size_t>(c)].kept) {
        break;
      }
      tuple[static_cast<size_t>(c)] = 0;
      --c;
    }
    if (c < 0) break;
  }
  return acc;
}

namespace {

// One Haar unitary per subsystem label, reused across copies.
std::map<std::string, Eigen::MatrixXcd> sample_local_unitaries(
    const LegLayout& layout, Rng& rng) {
  std::map<std::string, Eigen::MatrixXcd> us;
  for (const auto& [label, dim] : subsystem_dims(layout)) {
    us.emplace(label, haar_random_unitary(dim, rng));
  }
  return us;
}

Eigen::VectorXcd apply_local_unitaries(
    const std::map<std::string, Eigen::MatrixXcd>& us, bool adjoint,
    const Eigen::VectorXcd& v, const LegLayout& layout) {
  Eigen::VectorXcd out = v;
  for (int i = 0; i < layout.leg_count(); ++i) {
    const Eigen::MatrixXcd& u = us.at(layout.leg(i).subsystem);
    Eigen::MatrixXcd op = u;
    if (adjoint) op = u.adjoint();
    out = apply_to_legs(op, {i}, out, layout);
  }
  return out;
}

Eigen::MatrixXcd dense_local_unitary(
    const std::map<std::string, Eigen::MatrixXcd>& us,
    const LegLayout& layout) {
  Eigen::MatrixXcd u = us.at(layout.leg(0).subsystem);
  for (int i = 1; i < layout.leg_count(); ++i) {
    u = kron(u, us.at(layout.leg(i).subsystem));
  }
  return u;
}

template <typename ApplyFn>
double twirl_deviation(ApplyFn&& apply_a, const LegLayout& layout,
                       int n_samples, Rng& rng) {
  if (n_samples < 1) {
    throw std::invalid_argument("twirl_invariance_check: n_samples >= 1");
  }
  double worst = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const auto us = sample_local_unitaries(layout, rng);
    for (int probe = 0; probe < 2; ++probe) {
      const Eigen::VectorXcd v = random_state(layout, rng).amplitudes;
      const Eigen::VectorXcd twirled = apply_local_unitaries(
          us, false, apply_a(apply_local_unitaries(us, true, v, layout)),
          layout);
      const Eigen::VectorXcd direct = apply_a(v);
      worst = std::max(worst, (twirled - direct).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace

double twirl_invariance_check(const ObservableSpec& spec,
                              const LegLayout& layout, int n_samples,
                              Rng& rng) {
  spec.validate(layout);
  if (layout.total_dim() <= kTwirlDenseDim) {
    const Eigen::MatrixXcd a = realize(spec, layout);
    return twirl_invariance_check(a, layout, n_samples, rng);
  }
  return twirl_deviation(
      [&](const Eigen::VectorXcd& v) { return apply_spec(spec, v, layout); },
      layout, n_samples, rng);
}

double twirl_invariance_check(const Eigen::MatrixXcd& op,
                              const LegLayout& layout, int n_samples,
                              Rng& rng) {
  if (op.rows() != op.cols() || op.rows() != layout.total_dim()) {
    throw std::invalid_argument("twirl_invariance_check: operator/layout "
                                "dimension mismatch");
  }
  if (n_samples < 1) {
    throw std::invalid_argument("twirl_invariance_check: n_samples >= 1");
  }
  if (layout.total_dim() <= kTwirlDenseDim) {
    double worst = 0.0;
    for (int s = 0; s < n_samples; ++s) {
      const auto us = sample_local_unitaries(layout, rng);
      const Eigen::MatrixXcd u = dense_local_unitary(us, layout);
      worst = std::max(
          worst, (u * op * u.adjoint() - op).cwiseAbs().maxCoeff());
    }
    return worst;
  }
  return twirl_deviation(
      [&](const Eigen::VectorXcd& v) { return (op * v).eval(); }, layout,
      n_samples, rng);
}

ObservableSpec rebind_subsystems(const ObservableSpec& spec,
                                 const std::vector<std::string>& from,
                                 const std::vector<std::string>& to) {
  if (from.size() != to.size()) {
    throw std::invalid_argument("rebind_subsystems: label lists mismatch");
  }
  std::map<std::string, std::string> rename;
  for (size_t i = 0; i < from.size(); ++i) rename[from[i]] = to[i];
  ObservableSpec out = spec;
  for (ObservableTerm& term : out.terms) {
    for (ProjectorFactor& f : term.factors) {
      auto it = rename.find(f.subsystem);
      if (it != rename.end()) f.subsystem = it->second;
    }
  }
  return out;
}

}  // namespace entmeter
