// Copyright 2026 The entmeter Authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "entmeter/linalg.hpp"
#include "entmeter/random.hpp"

using namespace entmeter;

TEST_CASE("hermitian_eigensystem reconstructs its input") {
  Rng rng(100);
  const Eigen::MatrixXcd g = ginibre_matrix(5, 5, rng);
  const Eigen::MatrixXcd h = g + g.adjoint();
  const auto [w, v] = hermitian_eigensystem(h);
  CHECK((v * w.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
             v.adjoint() -
         h).norm() < 1e-10);
  for (int i = 1; i < w.size(); ++i) CHECK(w(i - 1) <= w(i));

  Eigen::MatrixXcd skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(hermitian_eigensystem(skew), std::invalid_argument);
}

TEST_CASE("psd_sqrt squares back and rejects indefinite input") {
  Rng rng(101);
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  const DensityOperator rho = random_density(layout, 3, rng);
  const Eigen::MatrixXcd root = psd_sqrt(rho.matrix);
  CHECK((root * root - rho.matrix).norm() < 1e-12);

  Eigen::MatrixXcd indef = Eigen::MatrixXcd::Identity(2, 2);
  indef(1, 1) = -0.5;
  CHECK_THROWS_AS(psd_sqrt(indef), std::invalid_argument);
}

TEST_CASE("haar unitaries are unitary across dimensions") {
  Rng rng(102);
  for (int d : {2, 3, 5}) {
    for (int k = 0; k < 10; ++k) {
      const Eigen::MatrixXcd u = haar_random_unitary(d, rng);
      CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).norm() <
            1e-12);
      CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("haar unitaries have the right first moment") {
  // E|U_00|^2 = 1/d, Var|U_00|^2 = 1/(d^2(d+1)) * (d-1); generous 5 sigma.
  Rng rng(103);
  const int d = 2;
  const int n = 4000;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    acc += std::norm(haar_random_unitary(d, rng)(0, 0));
  }
  const double mean = acc / n;
  const double var = 2.0 / (d * (d + 1.0)) - 1.0 / (d * d);
  const double sigma = std::sqrt(var / n);
  CHECK(std::abs(mean - 1.0 / d) < 5.0 * sigma);
}

TEST_CASE("random_state is normalized and seed-reproducible") {
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 3}});
  Rng a(7), b(7), c(8);
  const StateVector s1 = random_state(layout, a);
  const StateVector s2 = random_state(layout, b);
  const StateVector s3 = random_state(layout, c);
  CHECK(s1.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((s1.amplitudes - s2.amplitudes).norm() == 0.0);
  CHECK((s1.amplitudes - s3.amplitudes).norm() > 1e-3);
  s1.validate();
}

TEST_CASE("random_density respects the requested rank") {
  Rng rng(104);
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  for (int rank = 1; rank <= 4; ++rank) {
    const DensityOperator rho = random_density(layout, rank, rng);
    rho.validate();
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
    const auto [w, v] = hermitian_eigensystem(rho.matrix);
    int positive = 0;
    for (int i = 0; i < w.size(); ++i) {
      if (w(i) > 1e-12) ++positive;
    }
    CHECK(positive == rank);
  }
  CHECK_THROWS_AS(random_density(layout, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(random_density(layout, 5, rng), std::invalid_argument);
}
