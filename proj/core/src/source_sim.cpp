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

#include "entmeter/source_sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "entmeter/linalg.hpp"
#include "entmeter/oracles.hpp"
#include "entmeter/tensor.hpp"
#include "entmeter/tolerances.hpp"

namespace entmeter {

namespace {

// Dense sampling fallback needs ⊗rho as an explicit matrix; stay well under
// the dense cap.
constexpr std::int64_t kDenseSamplingCap = 1024;

bool is_two_qubit(const LegLayout& layout) {
  return layout.n_copies() == 1 && layout.leg_count() == 2 &&
         layout.leg(0).dim == 2 && layout.leg(1).dim == 2;
}

}  // namespace

void SourceModel::validate() const {
  if (ensemble.empty()) {
    throw std::invalid_argument("SourceModel: empty ensemble");
  }
  double total = 0.0;
  for (const WeightedState& ws : ensemble) {
    if (ws.probability < 0.0) {
      throw std::invalid_argument("SourceModel: negative probability");
    }
    total += ws.probability;
    if (ws.state.layout != ensemble[0].state.layout) {
      throw std::invalid_argument("SourceModel: members on different layouts");
    }
    if (std::abs(ws.state.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("SourceModel: member state not normalized");
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("SourceModel: probabilities sum to " +
                                std::to_string(total));
  }
}

std::vector<Eigen::MatrixXcd> StorageChannel::kraus_for(int dim) const {
  if (dim < 2) {
    throw std::invalid_argument("StorageChannel: subsystem dim must be >= 2");
  }
  if (q < 0.0 || q > 1.0) {
    throw std::invalid_argument("StorageChannel: q must be in [0, 1]");
  }
  std::vector<Eigen::MatrixXcd> ops;
  if (kind == ChannelKind::kDephasing) {
    ops.push_back(std::sqrt(1.0 - q) *
                  Eigen::MatrixXcd::Identity(dim, dim));
    for (int j = 0; j < dim; ++j) {
      Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(dim, dim);
      k(j, j) = std::sqrt(q);
      ops.push_back(std::move(k));
    }
    return ops;
  }

  // Uniform mixing over the d² shift/phase unitaries sends rho to
  // (1-q)·rho + q·1/d; fold the identity's share into the first operator.
  const double d2 = static_cast<double>(dim) * dim;
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) shift((j + 1) % dim, j) = 1.0;
  Eigen::MatrixXcd phase = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    phase(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / dim);
  }
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const double w =
          (a == 0 && b == 0) ? (1.0 - q + q / d2) : (q / d2);
      Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
      for (int k = 0; k < a; ++k) u = shift * u;
      for (int k = 0; k < b; ++k) u = phase * u;
      ops.push_back(std::sqrt(w) * u);
    }
  }
  return ops;
}

int StorageChannel::steps_for_copy(int copy, int n_copies) const {
  if (copy < 0 || copy >= n_copies) {
    throw std::invalid_argument("StorageChannel: copy index out of range");
  }
  if (steps.empty()) return n_copies - 1 - copy;
  if (steps.size() == 1) return steps[0];
  if (static_cast<int>(steps.size()) == n_copies) {
    return steps[static_cast<size_t>(copy)];
  }
  throw std::invalid_argument(
      "StorageChannel: steps must be empty, one entry, or one per copy");
}

StorageChannel depolarizing_channel(double q) {
  if (q < 0.0 || q > 1.0) {
    throw std::invalid_argument("depolarizing_channel: q must be in [0, 1]");
  }
  return StorageChannel{ChannelKind::kDepolarizing, q, {}};
}

StorageChannel dephasing_channel(double q) {
  if (q < 0.0 || q > 1.0) {
    throw std::invalid_argument("dephasing_channel: q must be in [0, 1]");
  }
  return StorageChannel{ChannelKind::kDephasing, q, {}};
}

DensityOperator effective_density(const SourceModel& source) {
  source.validate();
  const LegLayout& layout = source.ensemble[0].state.layout;
  Eigen::MatrixXcd acc =
      Eigen::MatrixXcd::Zero(layout.total_dim(), layout.total_dim());
  for (const WeightedState& ws : source.ensemble) {
    acc += ws.probability *
           (ws.state.amplitudes * ws.state.amplitudes.adjoint());
  }
  return DensityOperator(std::move(acc), layout);
}

DensityOperator ensemble_nfold_average(const SourceModel& source, int n) {
  source.validate();
  if (n < 1) {
    throw std::invalid_argument("ensemble_nfold_average: n must be >= 1");
  }
  const LegLayout& layout = source.ensemble[0].state.layout;
  const LegLayout full = layout.tensor_power(n);
  Eigen::MatrixXcd acc =
      Eigen::MatrixXcd::Zero(full.total_dim(), full.total_dim());

  const size_t m = source.ensemble.size();
  std::vector<size_t> tuple(static_cast<size_t>(n), 0);
  while (true) {
    double p = 1.0;
    Eigen::VectorXcd prod;
    for (int c = 0; c < n; ++c) {
      const WeightedState& ws = source.ensemble[tuple[static_cast<size_t>(c)]];
      p *= ws.probability;
      prod = (c == 0) ? ws.state.amplitudes : kron(prod, ws.state.amplitudes);
    }
    acc += p * (prod * prod.adjoint());
    int c = n - 1;
    while (c >= 0 && ++tuple[static_cast<size_t>(c)] == m) {
      tuple[static_cast<size_t>(c)] = 0;
      --c;
    }
    if (c < 0) break;
  }
  return DensityOperator(std::move(acc), full);
}

DensityOperator apply_channel(const DensityOperator& rho,
                              const StorageChannel& channel) {
  const LegLayout& layout = rho.layout;
  Eigen::MatrixXcd current = rho.matrix;
  for (int leg = 0; leg < layout.leg_count(); ++leg) {
    const auto kraus = channel.kraus_for(layout.leg(leg).dim);
    Eigen::MatrixXcd next =
        Eigen::MatrixXcd::Zero(current.rows(), current.cols());
    for (const Eigen::MatrixXcd& k : kraus) {
      const Eigen::MatrixXcd embedded = embed_on_legs(k, {leg}, layout);
      next += embedded * current * embedded.adjoint();
    }
    current = std::move(next);
  }
  return DensityOperator(std::move(current), layout);
}

DensityOperator apply_storage(const DensityOperator& rho,
                              const StorageChannel& channel, int steps) {
  if (steps < 0) {
    throw std::invalid_argument("apply_storage: steps must be >= 0");
  }
  DensityOperator out = rho;
  for (int s = 0; s < steps; ++s) out = apply_channel(out, channel);
  return out;
}

std::vector<DensityOperator> prepare_copies(const ExperimentConfig& config) {
  if (config.n_copies < 1) {
    throw std::invalid_argument("prepare_copies: n_copies must be >= 1");
  }
  const DensityOperator rho = effective_density(config.source);
  std::vector<DensityOperator> copies;
  copies.reserve(static_cast<size_t>(config.n_copies));
  for (int i = 0; i < config.n_copies; ++i) {
    copies.push_back(apply_storage(
        rho, config.channel,
        config.channel.steps_for_copy(i, config.n_copies)));
  }
  return copies;
}

namespace {

struct SamplingSlot {
  std::string subsystem;
  int copy_lo = 0;
  int copy_hi = 0;
  std::vector<int> legs;        // the two target legs, ordered
  Eigen::MatrixXcd antisym;     // projector on the slot
};

// Factor-wise sampling plan: every non-identity factor maps to a slot; valid
// only if all slots occupy pairwise disjoint legs (then the slot projectors
// commute and admit sequential projective measurement).
struct SamplingPlan {
  std::vector<SamplingSlot> slots;
  // Per term: (slot index, wants antisymmetric outcome).
  std::vector<std::vector<std::pair<int, bool>>> term_requirements;
  std::vector<double> coeffs;
  bool factorizable = true;
};

SamplingPlan build_plan(const ObservableSpec& spec, const LegLayout& full) {
  SamplingPlan plan;
  std::map<std::tuple<std::string, int, int>, int> slot_ids;
  std::map<int, int> leg_owner;
  for (const ObservableTerm& term : spec.terms) {
    plan.coeffs.push_back(term.coeff);
    std::vector<std::pair<int, bool>> reqs;
    for (const ProjectorFactor& f : term.factors) {
      if (f.kind == FactorKind::kIdentity) continue;
      const int lo = std::min(f.copies[0], f.copies[1]);
      const int hi = std::max(f.copies[0], f.copies[1]);
      const auto key = std::make_tuple(f.subsystem, lo, hi);
      auto it = slot_ids.find(key);
      if (it == slot_ids.end()) {
        SamplingSlot slot;
        slot.subsystem = f.subsystem;
        slot.copy_lo = lo;
        slot.copy_hi = hi;
        slot.legs = {full.require(lo, f.subsystem),
                     full.require(hi, f.subsystem)};
        slot.antisym = antisym_projector(full.leg(slot.legs[0]).dim);
        for (int leg : slot.legs) {
          const bool fresh =
              leg_owner.insert({leg, static_cast<int>(plan.slots.size())})
                  .second;
          if (!fresh) plan.factorizable = false;
        }
        it = slot_ids.insert({key, static_cast<int>(plan.slots.size())}).first;
        plan.slots.push_back(std::move(slot));
      } else {
        // Same slot reused by another term: still disjoint.
      }
      reqs.push_back({it->second, f.kind == FactorKind::kAntisym});
    }
    plan.term_requirements.push_back(std::move(reqs));
  }
  return plan;
}

struct CopySpectrum {
  std::vector<double> cumulative;  // over kept eigenvectors
  Eigen::MatrixXcd vectors;
  std::vector<Eigen::Index> kept;
  double trace = 0.0;
};

CopySpectrum decompose_copy(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (rho.matrix + rho.matrix.adjoint()));
  CopySpectrum out;
  out.vectors = solver.eigenvectors();
  double total = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double w = solver.eigenvalues()(i);
    if (w > 1e-14) {
      out.kept.push_back(i);
      total += w;
    }
  }
  if (out.kept.empty()) {
    throw std::invalid_argument("sample_expectation: copy has zero trace");
  }
  out.trace = total;
  double acc = 0.0;
  for (Eigen::Index i : out.kept) {
    acc += solver.eigenvalues()(i) / total;
    out.cumulative.push_back(acc);
  }
  out.cumulative.back() = 1.0;
  return out;
}

ShotEstimate finalize(double sum, double sumsq, std::int64_t shots) {
  ShotEstimate est;
  est.shots = shots;
  est.estimate = sum / static_cast<double>(shots);
  if (shots > 1) {
    const double var =
        std::max(0.0, (sumsq - static_cast<double>(shots) * est.estimate *
                                   est.estimate) /
                          static_cast<double>(shots - 1));
    est.std_error = std::sqrt(var / static_cast<double>(shots));
  }
  return est;
}

ShotEstimate sample_factor_wise(const SamplingPlan& plan,
                                const std::vector<CopySpectrum>& spectra,
                                const LegLayout& full, std::int64_t shots,
                                Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double trace_scale = 1.0;
  for (const CopySpectrum& s : spectra) trace_scale *= s.trace;

  double sum = 0.0, sumsq = 0.0;
  std::vector<char> outcome_antisym(plan.slots.size());
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    // Draw one eigenvector per copy, build the product state.
    Eigen::VectorXcd phi;
    for (size_t c = 0; c < spectra.size(); ++c) {
      const CopySpectrum& s = spectra[c];
      const double u = unif(rng);
      size_t pick = 0;
      while (pick + 1 < s.cumulative.size() && u > s.cumulative[pick]) ++pick;
      const Eigen::VectorXcd v = s.vectors.col(s.kept[pick]);
      phi = (c == 0) ? v : kron(phi, v);
    }
    // Measure each slot projectively; slots commute (disjoint legs).
    for (size_t sl = 0; sl < plan.slots.size(); ++sl) {
      const SamplingSlot& slot = plan.slots[sl];
      Eigen::VectorXcd projected =
          apply_to_legs(slot.antisym, slot.legs, phi, full);
      const double p_anti =
          std::min(1.0, std::max(0.0, projected.squaredNorm()));
      if (unif(rng) < p_anti) {
        outcome_antisym[sl] = 1;
        phi = projected / std::sqrt(std::max(p_anti, 1e-300));
      } else {
        outcome_antisym[sl] = 0;
        phi = (phi - projected) / std::sqrt(std::max(1.0 - p_anti, 1e-300));
      }
    }
    double value = 0.0;
    for (size_t t = 0; t < plan.coeffs.size(); ++t) {
      bool all = true;
      for (const auto& [slot, wants_anti] : plan.term_requirements[t]) {
        if ((outcome_antisym[static_cast<size_t>(slot)] == 1) != wants_anti) {
          all = false;
          break;
        }
      }
      if (all) value += plan.coeffs[t];
    }
    value *= trace_scale;
    sum += value;
    sumsq += value * value;
  }
  return finalize(sum, sumsq, shots);
}

ShotEstimate sample_dense(const ObservableSpec& spec,
                          const std::vector<DensityOperator>& copies,
                          const LegLayout& full, std::int64_t shots,
                          Rng& rng) {
  if (full.total_dim() > kDenseSamplingCap) {
    throw std::invalid_argument(
        "sample_expectation: observable is not factor-wise sampleable and "
        "the dense fallback exceeds its cap");
  }
  const Eigen::MatrixXcd a = realize(spec, full);
  auto [eigs, vecs] = hermitian_eigensystem(a);

  Eigen::MatrixXcd big = copies[0].matrix;
  for (size_t c = 1; c < copies.size(); ++c) big = kron(big, copies[c].matrix);
  const double trace_scale = big.trace().real();

  std::vector<double> cumulative(static_cast<size_t>(eigs.size()));
  double acc = 0.0;
  for (Eigen::Index k = 0; k < eigs.size(); ++k) {
    const double p = std::max(
        0.0, (vecs.col(k).adjoint() * big * vecs.col(k))(0, 0).real() /
                 trace_scale);
    acc += p;
    cumulative[static_cast<size_t>(k)] = acc;
  }
  cumulative.back() = std::max(cumulative.back(), 1.0);

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double sum = 0.0, sumsq = 0.0;
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    const double u = unif(rng);
    size_t pick = 0;
    while (pick + 1 < cumulative.size() && u > cumulative[pick]) ++pick;
    const double value = eigs(static_cast<Eigen::Index>(pick)) * trace_scale;
    sum += value;
    sumsq += value * value;
  }
  return finalize(sum, sumsq, shots);
}

}  // namespace

ShotEstimate sample_expectation(const ObservableSpec& observable,
                                const std::vector<DensityOperator>& copies,
                                std::int64_t shots, Rng& rng) {
  if (shots < 1) {
    throw std::invalid_argument("sample_expectation: shots must be >= 1");
  }
  if (static_cast<int>(copies.size()) != observable.n_copies) {
    throw std::invalid_argument("sample_expectation: copy-count mismatch");
  }
  for (const DensityOperator& rho : copies) {
    if (rho.layout != copies[0].layout) {
      throw std::invalid_argument("sample_expectation: layout mismatch");
    }
  }
  const LegLayout single = copies[0].layout;
  const LegLayout full = single.tensor_power(observable.n_copies);
  observable.validate(full);

  const SamplingPlan plan = build_plan(observable, full);
  if (plan.factorizable) {
    std::vector<CopySpectrum> spectra;
    spectra.reserve(copies.size());
    for (const DensityOperator& rho : copies) {
      spectra.push_back(decompose_copy(rho));
    }
    return sample_factor_wise(plan, spectra, full, shots, rng);
  }
  return sample_dense(observable, copies, full, shots, rng);
}

BoundReport run_experiment(const ExperimentConfig& config) {
  if (config.shots < 1) {
    throw std::invalid_argument("run_experiment: shots must be >= 1");
  }
  if (config.observable.n_copies != config.n_copies) {
    throw std::invalid_argument(
        "run_experiment: observable copy count does not match n_copies");
  }
  const std::vector<DensityOperator> copies = prepare_copies(config);
  const double exact = expectation(config.observable, copies);

  Rng rng(config.seed);
  const ShotEstimate est =
      sample_expectation(config.observable, copies, config.shots, rng);

  const int n = config.n_copies;
  BoundReport report;
  report.raw_trace = exact;
  report.bound = std::pow(std::max(0.0, exact), 1.0 / n);
  report.estimate = est.estimate;
  report.std_error = est.std_error;
  report.bound_estimate = std::pow(std::max(0.0, est.estimate), 1.0 / n);
  if (config.alpha1) report.alpha1 = *config.alpha1;
  // The canonical bound family ships with its audit certificate.
  report.certified = config.alpha1.has_value();

  if (is_two_qubit(copies[0].layout)) {
    double product = 1.0;
    for (const DensityOperator& rho : copies) {
      report.copy_oracles.push_back(wootters_concurrence(rho));
      product *= report.copy_oracles.back();
    }
    report.oracle = wootters_concurrence(effective_density(config.source));
    report.geometric_mean_ok = product >= exact - 1e-9;
  }
  return report;
}

}  // namespace entmeter
