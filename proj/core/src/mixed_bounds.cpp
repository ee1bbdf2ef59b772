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

#include "entmeter/mixed_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "entmeter/oracles.hpp"
#include "entmeter/tolerances.hpp"

namespace entmeter {

namespace {

bool is_two_qubit(const LegLayout& layout) {
  return layout.n_copies() == 1 && layout.leg_count() == 2 &&
         layout.leg(0).dim == 2 && layout.leg(1).dim == 2;
}

double signed_root(double x, int n) {
  const double mag = std::pow(std::abs(x), 1.0 / n);
  return x < 0.0 ? -mag : mag;
}

ObservableSpec bind_to_layout(const ObservableSpec& spec,
                              const LegLayout& single_copy) {
  const std::vector<std::string> have = single_copy.subsystems();
  if (have.size() != 2) {
    throw std::invalid_argument("bound: state must be bipartite");
  }
  return rebind_subsystems(spec, {"A", "B"}, have);
}

}  // namespace

ObservableSpec v_operator(const BoundConfig& config) {
  if (config.alpha1 < 0.0 || config.alpha1 > 1.0) {
    throw std::invalid_argument("v_operator: alpha1 must be in [0, 1]");
  }
  const double s = config.normalization == Normalization::kCalibrated
                       ? concurrence_definition().calibration
                       : 1.0;
  const double s2 = s * s;
  const auto anti = [](const std::string& sub) {
    return ProjectorFactor{FactorKind::kAntisym, sub, {0, 1}};
  };
  const auto symm = [](const std::string& sub) {
    return ProjectorFactor{FactorKind::kSym, sub, {0, 1}};
  };

  ObservableSpec spec;
  spec.n_copies = 2;
  spec.terms.push_back({s2, {anti("A"), anti("B")}});
  if (config.alpha1 > 0.0) {
    spec.terms.push_back({-s2 * config.alpha1, {anti("A"), symm("B")}});
  }
  if (config.alpha2() > 0.0) {
    spec.terms.push_back({-s2 * config.alpha2(), {symm("A"), anti("B")}});
  }
  return spec;
}

BoundReport concurrence_lower_bound(const DensityOperator& rho,
                                    const BoundConfig& config) {
  const ObservableSpec spec =
      bind_to_layout(v_operator(config), rho.layout);
  const double raw = expectation(spec, std::vector<DensityOperator>{rho, rho});

  BoundReport report;
  report.raw_trace = raw;
  report.alpha1 = config.alpha1;
  report.bound = config.clamp ? std::sqrt(std::max(0.0, raw))
                              : signed_root(raw, 2);
  if (is_two_qubit(rho.layout)) {
    report.oracle = wootters_concurrence(rho);
  }
  // Validity of the shipped family over alpha1 in [0,1] is established by
  // the audit suite; out-of-range configs never get this far.
  report.certified = true;
  return report;
}

ObservableSpec purity_deficit_spec(
    const std::vector<std::string>& subsystems) {
  if (subsystems.empty()) {
    throw std::invalid_argument("purity_deficit_spec: no subsystems");
  }
  ObservableSpec spec;
  spec.n_copies = 2;
  // (1 - Π_full)/2 with Π_full the exchange of whole copies: the exchange
  // factorizes per subsystem as (sym - antisym), expanded here by parity.
  spec.terms.push_back({0.5, {}});
  const size_t k = subsystems.size();
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    ObservableTerm term;
    int antis = 0;
    for (size_t s = 0; s < k; ++s) {
      const bool anti = (mask >> s) & 1ull;
      antis += anti ? 1 : 0;
      term.factors.push_back(ProjectorFactor{
          anti ? FactorKind::kAntisym : FactorKind::kSym, subsystems[s],
          {0, 1}});
    }
    term.coeff = -0.5 * ((antis % 2 == 0) ? 1.0 : -1.0);
    spec.terms.push_back(std::move(term));
  }
  return spec;
}

double purity_deficit(const DensityOperator& rho) {
  const ObservableSpec spec = purity_deficit_spec(rho.layout.subsystems());
  return expectation(spec, std::vector<DensityOperator>{rho, rho});
}

AuditReport inequality_audit(
    const ObservableSpec& spec,
    const std::function<double(const StateVector&)>& pure_monotone,
    const LegLayout& single_copy, std::int64_t n_trials, Rng& rng) {
  if (n_trials < 1) {
    throw std::invalid_argument("inequality_audit: n_trials must be >= 1");
  }
  const int n = spec.n_copies;
  spec.validate(single_copy.tensor_power(n));

  std::uniform_real_distribution<double> weight(0.5, 1.0);
  AuditReport report;
  report.trials = n_trials;
  for (std::int64_t t = 0; t < n_trials; ++t) {
    std::vector<StateVector> tuple;
    double lhs = 1.0;
    for (int c = 0; c < n; ++c) {
      StateVector psi = random_state(single_copy, rng);
      psi.amplitudes *= std::sqrt(weight(rng));
      lhs *= pure_monotone(psi);
      tuple.push_back(std::move(psi));
    }
    const double rhs = expectation(spec, tuple);
    const double margin = lhs - rhs;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < -tol::kNegativeClamp) ++report.violations;
  }
  report.certified = report.violations == 0;
  return report;
}

BoundReport generic_bound(const DensityOperator& rho,
                          const ObservableSpec& spec, int n,
                          const std::optional<AuditReport>& certificate) {
  if (n < 1) throw std::invalid_argument("generic_bound: n must be >= 1");
  if (spec.n_copies != n) {
    throw std::invalid_argument("generic_bound: spec copy count mismatch");
  }
  const double raw =
      expectation(spec, std::vector<DensityOperator>(static_cast<size_t>(n),
                                                     rho));
  BoundReport report;
  report.raw_trace = raw;
  report.bound = std::pow(std::max(0.0, raw), 1.0 / n);
  report.certified = certificate && certificate->certified;
  report.violations = certificate ? certificate->violations : 0;
  if (certificate) report.alpha1 = certificate->alpha1;
  return report;
}

double geometric_mean_bound(const std::vector<DensityOperator>& rhos,
                            const ObservableSpec& spec, bool clamp) {
  if (rhos.empty()) {
    throw std::invalid_argument("geometric_mean_bound: no copies");
  }
  for (const DensityOperator& rho : rhos) {
    if (rho.layout != rhos[0].layout) {
      throw std::invalid_argument("geometric_mean_bound: layout mismatch");
    }
  }
  const int n = static_cast<int>(rhos.size());
  const double raw = expectation(spec, rhos);
  return clamp ? std::pow(std::max(0.0, raw), 1.0 / n) : signed_root(raw, n);
}

}  // namespace entmeter
