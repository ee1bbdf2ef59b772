// Copyright 2026 The entmeter Authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "entmeter/monotones.hpp"
#include "entmeter/named_states.hpp"
#include "entmeter/oracles.hpp"
#include "entmeter/random.hpp"
#include "entmeter/tensor.hpp"

using namespace entmeter;

TEST_CASE("calibration constants are anchored to reference states") {
  // Fixed once by the anchor raw expectations below; any change here is a
  // normalization break, not a tuning knob.
  CHECK(concurrence_definition().calibration == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(tangle_definition().calibration == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(gconc3_definition().calibration == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(gconc4_definition().calibration == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("anchor states have the frozen raw expectations") {
  CHECK(raw_expectation(concurrence_definition(), singlet_state()) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(raw_expectation(tangle_definition(), ghz_state()) ==
        doctest::Approx(1.0 / 256).epsilon(1e-12));
  CHECK(raw_expectation(gconc3_definition(), maxent_state(3)) ==
        doctest::Approx(1.0 / 27).epsilon(1e-12));
  CHECK(raw_expectation(gconc4_definition(), maxent_state(4)) ==
        doctest::Approx(1.0 / 256).epsilon(1e-12));
}

TEST_CASE("anchor states evaluate to one") {
  CHECK(concurrence_pure(singlet_state()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tangle_pure(ghz_state()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g_concurrence_3x3(maxent_state(3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g_concurrence_4x4(maxent_state(4)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("product states carry no entanglement") {
  const LegLayout qubit_pair = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  Eigen::VectorXcd v00 = Eigen::VectorXcd::Zero(4);
  v00(0) = 1.0;
  CHECK(concurrence_pure(StateVector(v00, qubit_pair)) <= 1e-12);

  const LegLayout three = LegLayout::single_copy({{"A", 2}, {"B", 2}, {"C", 2}});
  Eigen::VectorXcd v000 = Eigen::VectorXcd::Zero(8);
  v000(0) = 1.0;
  CHECK(tangle_pure(StateVector(v000, three)) <= 1e-12);

  // A biseparable A|(BC) state has zero three-way content.
  Eigen::VectorXcd bisep = Eigen::VectorXcd::Zero(8);
  bisep(0) = 1.0 / std::sqrt(2.0);  // |0>|00>
  bisep(3) = 1.0 / std::sqrt(2.0);  // |0>|11>
  CHECK(tangle_pure(StateVector(bisep, three)) <= 1e-6);
}

TEST_CASE("two-qubit pure values match the spin-flip formula") {
  Rng rng(300);
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  for (int k = 0; k < 100; ++k) {
    const StateVector psi = random_state(layout, rng);
    const double direct = concurrence_pure(psi);
    const double oracle = wootters_concurrence(pure_density(psi));
    CHECK(std::abs(direct - oracle) <= 1e-10);
  }
}

TEST_CASE("squared concurrence equals twice the purity loss") {
  Rng rng(301);
  for (auto dims : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const LegLayout layout =
        LegLayout::single_copy({{"A", dims.first}, {"B", dims.second}});
    for (int k = 0; k < 25; ++k) {
      const StateVector psi = random_state(layout, rng);
      const DensityOperator ra = reduced_density(psi, {0});
      const double purity = (ra.matrix * ra.matrix).trace().real();
      const double c = concurrence_pure(psi);
      CHECK(c * c == doctest::Approx(2.0 * (1.0 - purity)).epsilon(1e-9));
    }
  }
}

TEST_CASE("three-qubit values against the hyperdeterminant") {
  CHECK(tangle_pure(ghz_state()) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tangle_pure(w_state()) <= 1e-6);
  CHECK(ckw_tangle(ghz_state()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ckw_tangle(w_state()) <= 1e-12);

  // The four-copy expectation recovers the squared hyperdeterminant value,
  // so the observable route equals the square root of the algebraic oracle.
  Rng rng(302);
  const LegLayout layout = tangle_definition().single_copy;
  for (int k = 0; k < 50; ++k) {
    const StateVector psi = random_state(layout, rng);
    const double t = tangle_pure(psi);
    CHECK(std::abs(t * t - ckw_tangle(psi)) <= 1e-10);
  }
}

TEST_CASE("geometric-mean monotones agree with the Schmidt oracle") {
  Rng rng(303);
  const LegLayout l3 = LegLayout::single_copy({{"A", 3}, {"B", 3}});
  for (int k = 0; k < 50; ++k) {
    const StateVector psi = random_state(l3, rng);
    CHECK(std::abs(g_concurrence_3x3(psi) - schmidt_g_concurrence(psi)) <=
          1e-8);
  }
  const LegLayout l4 = LegLayout::single_copy({{"A", 4}, {"B", 4}});
  for (int k = 0; k < 10; ++k) {
    const StateVector psi = random_state(l4, rng);
    CHECK(std::abs(g_concurrence_4x4(psi) - schmidt_g_concurrence(psi)) <=
          1e-7);
  }
}

TEST_CASE("rank-deficient states score zero geometric mean") {
  Rng rng(304);
  const LegLayout l3 = LegLayout::single_copy({{"A", 3}, {"B", 3}});
  for (int k = 0; k < 10; ++k) {
    // Schmidt rank 2 by construction: span of |00> and |11> rotated locally.
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
    const double theta = 0.1 + 0.13 * k;
    v(0) = std::cos(theta);
    v(4) = std::sin(theta);
    StateVector psi(v, l3);
    const Eigen::MatrixXcd ua = haar_random_unitary(3, rng);
    const Eigen::MatrixXcd ub = haar_random_unitary(3, rng);
    psi = apply_to_legs(ua, {0}, psi);
    psi = apply_to_legs(ub, {1}, psi);
    CHECK(g_concurrence_3x3(psi) <= 1e-8);
  }
}

TEST_CASE("dimension contracts are enforced") {
  const LegLayout qutrits = LegLayout::single_copy({{"A", 3}, {"B", 3}});
  Rng rng(305);
  const StateVector psi33 = random_state(qutrits, rng);
  CHECK_THROWS_AS(tangle_pure(psi33), std::invalid_argument);
  CHECK_THROWS_AS(g_concurrence_4x4(psi33), std::invalid_argument);
  // Concurrence accepts any bipartite dimensions.
  CHECK_NOTHROW(concurrence_pure(psi33));
  // But not a tripartite layout.
  const LegLayout three = LegLayout::single_copy({{"A", 2}, {"B", 2}, {"C", 2}});
  const StateVector psi3 = random_state(three, rng);
  CHECK_THROWS_AS(concurrence_pure(psi3), std::invalid_argument);
}

TEST_CASE("raw normalization returns the bare expectation") {
  const StateVector psi = singlet_state();
  const double raw =
      evaluate_monotone(concurrence_definition(), psi, Normalization::kRaw);
  CHECK(raw == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("monotones accept relabeled subsystems positionally") {
  Rng rng(306);
  const LegLayout relabeled = LegLayout::single_copy({{"left", 2}, {"right", 2}});
  const StateVector psi = random_state(relabeled, rng);
  CHECK(concurrence_pure(psi) ==
        doctest::Approx(wootters_concurrence(pure_density(psi)))
            .epsilon(1e-10));
}

TEST_CASE("monotone registry lookups") {
  CHECK(monotone_by_name("tangle").n_copies == 4);
  CHECK(monotone_by_name("gconc4").n_copies == 4);
  CHECK_THROWS_AS(monotone_by_name("nope"), std::invalid_argument);
}
