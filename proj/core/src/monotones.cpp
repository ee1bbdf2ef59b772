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

#include "entmeter/monotones.hpp"

#include <cmath>
#include <stdexcept>

#include "entmeter/named_states.hpp"
#include "entmeter/oracles.hpp"
#include "entmeter/tensor.hpp"
#include "entmeter/tolerances.hpp"

namespace entmeter {

namespace {

ProjectorFactor antisym(const std::string& subsystem, int c0, int c1) {
  return ProjectorFactor{FactorKind::kAntisym, subsystem, {c0, c1}};
}

ProjectorFactor sym(const std::string& subsystem, int c0, int c1) {
  return ProjectorFactor{FactorKind::kSym, subsystem, {c0, c1}};
}

// Anchors the calibration so the definition reproduces oracle_value on the
// anchor state: calibration = oracle / expectation^{1/n}.
double calibrate(const MonotoneDefinition& defn, const StateVector& anchor,
                 double oracle_value) {
  const double raw = raw_expectation(defn, anchor);
  if (raw <= 0.0) {
    throw std::logic_error("calibrate: anchor expectation not positive for " +
                           defn.name);
  }
  return oracle_value / std::pow(raw, 1.0 / defn.n_copies);
}

MonotoneDefinition build_concurrence() {
  MonotoneDefinition d;
  d.name = "concurrence";
  d.n_copies = 2;
  d.single_copy = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  d.observable.n_copies = 2;
  d.observable.terms = {{1.0, {antisym("A", 0, 1), antisym("B", 0, 1)}}};
  const StateVector anchor = singlet_state();
  d.calibration = calibrate(d, anchor, wootters_concurrence(pure_density(anchor)));
  return d;
}

MonotoneDefinition build_tangle() {
  MonotoneDefinition d;
  d.name = "tangle";
  d.n_copies = 4;
  d.single_copy = LegLayout::single_copy({{"A", 2}, {"B", 2}, {"C", 2}});
  d.required_dims = {2, 2, 2};
  d.observable.n_copies = 4;
  d.observable.terms = {{1.0,
                         {antisym("A", 0, 1), antisym("A", 2, 3),
                          antisym("B", 0, 2), antisym("B", 1, 3),
                          antisym("C", 0, 1), antisym("C", 2, 3)}}};
  const StateVector anchor = ghz_state();
  d.calibration = calibrate(d, anchor, ckw_tangle(anchor));
  return d;
}

MonotoneDefinition build_gconc3() {
  MonotoneDefinition d;
  d.name = "gconc3";
  d.n_copies = 3;
  d.single_copy = LegLayout::single_copy({{"A", 3}, {"B", 3}});
  d.required_dims = {3, 3};
  d.observable.n_copies = 3;
  // Copies 0 of A and 2 of B stay untouched (implicit identity).
  d.observable.terms = {
      {1.0, {antisym("A", 1, 2), antisym("B", 0, 1)}},
      {-1.0 / 3.0, {sym("A", 1, 2), antisym("B", 0, 1)}},
  };
  const StateVector anchor = maxent_state(3);
  d.calibration = calibrate(d, anchor, schmidt_g_concurrence(anchor));
  return d;
}

MonotoneDefinition build_gconc4() {
  MonotoneDefinition d;
  d.name = "gconc4";
  d.n_copies = 4;
  d.single_copy = LegLayout::single_copy({{"A", 4}, {"B", 4}});
  d.required_dims = {4, 4};
  d.observable.n_copies = 4;
  d.observable.terms = {
      {1.0,
       {antisym("A", 0, 1), antisym("A", 2, 3), antisym("B", 0, 2),
        antisym("B", 1, 3)}},
      {-1.0 / 3.0,
       {sym("A", 0, 1), sym("A", 2, 3), antisym("B", 0, 2),
        antisym("B", 1, 3)}},
  };
  const StateVector anchor = maxent_state(4);
  d.calibration = calibrate(d, anchor, schmidt_g_concurrence(anchor));
  return d;
}

// Binds the canonical observable to the state's own subsystem labels and
// checks the structural preconditions.
ObservableSpec bind_to_state(const MonotoneDefinition& defn,
                             const StateVector& psi) {
  const LegLayout& layout = psi.layout;
  if (layout.n_copies() != 1) {
    throw std::invalid_argument(defn.name + ": input must be a single copy");
  }
  const auto want = defn.single_copy.subsystems();
  const auto have = layout.subsystems();
  if (have.size() != want.size()) {
    throw std::invalid_argument(
        defn.name + ": expected " + std::to_string(want.size()) +
        " subsystems, got " + std::to_string(have.size()));
  }
  if (!defn.required_dims.empty()) {
    for (size_t i = 0; i < have.size(); ++i) {
      if (layout.leg(static_cast<int>(i)).dim != defn.required_dims[i]) {
        throw std::invalid_argument(defn.name +
                                    ": subsystem dimensions do not match");
      }
    }
  }
  return rebind_subsystems(defn.observable, want, have);
}

}  // namespace

const MonotoneDefinition& concurrence_definition() {
  static const MonotoneDefinition d = build_concurrence();
  return d;
}

const MonotoneDefinition& tangle_definition() {
  static const MonotoneDefinition d = build_tangle();
  return d;
}

const MonotoneDefinition& gconc3_definition() {
  static const MonotoneDefinition d = build_gconc3();
  return d;
}

const MonotoneDefinition& gconc4_definition() {
  static const MonotoneDefinition d = build_gconc4();
  return d;
}

const MonotoneDefinition& monotone_by_name(const std::string& name) {
  if (name == "concurrence") return concurrence_definition();
  if (name == "tangle") return tangle_definition();
  if (name == "gconc3") return gconc3_definition();
  if (name == "gconc4") return gconc4_definition();
  throw std::invalid_argument("monotone_by_name: unknown monotone '" + name +
                              "'");
}

double raw_expectation(const MonotoneDefinition& definition,
                       const StateVector& psi) {
  const ObservableSpec spec = bind_to_state(definition, psi);
  return expectation(spec, nfold_copy(psi, definition.n_copies));
}

double evaluate_monotone(const MonotoneDefinition& definition,
                         const StateVector& psi,
                         Normalization normalization) {
  double raw = raw_expectation(definition, psi);
  if (normalization == Normalization::kRaw) return raw;
  if (raw < -tol::kNegativeClamp) {
    throw std::runtime_error(definition.name +
                             ": expectation " + std::to_string(raw) +
                             " is negative beyond tolerance (mis-built spec)");
  }
  if (std::abs(raw) <= tol::kExpectationNoiseFloor) raw = 0.0;
  raw = std::max(0.0, raw);
  return definition.calibration * std::pow(raw, 1.0 / definition.n_copies);
}

double concurrence_pure(const StateVector& psi) {
  return evaluate_monotone(concurrence_definition(), psi);
}

double tangle_pure(const StateVector& psi) {
  return evaluate_monotone(tangle_definition(), psi);
}

double g_concurrence_3x3(const StateVector& psi) {
  return evaluate_monotone(gconc3_definition(), psi);
}

double g_concurrence_4x4(const StateVector& psi) {
  return evaluate_monotone(gconc4_definition(), psi);
}

}  // namespace entmeter
