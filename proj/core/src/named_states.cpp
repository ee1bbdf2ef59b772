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

#include "entmeter/named_states.hpp"

#include <cmath>
#include <stdexcept>

namespace entmeter {

namespace {

LegLayout qubit_pair() { return LegLayout::single_copy({{"A", 2}, {"B", 2}}); }

}  // namespace

StateVector singlet_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  v(1) = s;
  v(2) = -s;
  return StateVector(std::move(v), qubit_pair());
}

StateVector ghz_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  const double s = 1.0 / std::sqrt(2.0);
  v(0) = s;
  v(7) = s;
  return StateVector(std::move(v),
                     LegLayout::single_copy({{"A", 2}, {"B", 2}, {"C", 2}}));
}

StateVector w_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  const double s = 1.0 / std::sqrt(3.0);
  v(1) = s;
  v(2) = s;
  v(4) = s;
  return StateVector(std::move(v),
                     LegLayout::single_copy({{"A", 2}, {"B", 2}, {"C", 2}}));
}

StateVector maxent_state(int d) {
  if (d < 2) throw std::invalid_argument("maxent_state: d must be >= 2");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) v(static_cast<Eigen::Index>(j) * d + j) = s;
  return StateVector(std::move(v),
                     LegLayout::single_copy({{"A", d}, {"B", d}}));
}

DensityOperator werner_state(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("werner_state: p must be in [0, 1]");
  }
  const StateVector s = singlet_state();
  Eigen::MatrixXcd m = p * (s.amplitudes * s.amplitudes.adjoint()) +
                       (1.0 - p) * 0.25 * Eigen::MatrixXcd::Identity(4, 4);
  return DensityOperator(std::move(m), qubit_pair());
}

NamedState make_named_state(const std::string& name) {
  NamedState out;
  if (name == "singlet") {
    out.pure = singlet_state();
  } else if (name == "ghz") {
    out.pure = ghz_state();
  } else if (name == "w") {
    out.pure = w_state();
  } else if (name == "maxent3") {
    out.pure = maxent_state(3);
  } else if (name == "maxent4") {
    out.pure = maxent_state(4);
  } else if (name.rfind("maxent:", 0) == 0) {
    int d = 0;
    try {
      size_t used = 0;
      d = std::stoi(name.substr(7), &used);
      if (used != name.size() - 7) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("named state: cannot parse '" + name + "'");
    }
    out.pure = maxent_state(d);
  } else if (name.rfind("werner:", 0) == 0) {
    double p = 0.0;
    try {
      size_t used = 0;
      p = std::stod(name.substr(7), &used);
      if (used != name.size() - 7) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("named state: cannot parse '" + name + "'");
    }
    out.density = werner_state(p);
  } else {
    throw std::invalid_argument("named state: unknown name '" + name + "'");
  }
  return out;
}

}  // namespace entmeter
