// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

#include <lpn/linalg.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace lpn {
namespace {

TEST(HermitianEigenvalues, PauliX) {
  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  const auto e = hermitian_eigenvalues(x);
  EXPECT_NEAR(e(0), -1.0, 1e-15);
  EXPECT_NEAR(e(1), 1.0, 1e-15);
}

TEST(HermitianEigenvalues, DiagonalIsSortedAscending) {
  Eigen::MatrixXcd d = Eigen::VectorXcd::Map(std::vector<Complex>{0.7, 0.1, 0.2}.data(), 3).asDiagonal();
  const auto e = hermitian_eigenvalues(d);
  EXPECT_NEAR(e(0), 0.1, 1e-15);
  EXPECT_NEAR(e(1), 0.2, 1e-15);
  EXPECT_NEAR(e(2), 0.7, 1e-15);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(hermitian_eigenvalues(m), std::invalid_argument);
  EXPECT_THROW(hermitian_eigenvalues(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
}

TEST(HermitianEigenvalues, RandomMatricesAgreeWithJacobiAndCharacteristicPolynomial) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hermitian(rng, 8);
    const auto e = hermitian_eigenvalues(h);
    const auto jac = oracle::jacobi_eigenvalues(h);
    for (Eigen::Index k = 0; k < 8; ++k) EXPECT_NEAR(e(k), jac[static_cast<std::size_t>(k)], 1e-10);

    const auto cp = oracle::characteristic_polynomial(h);
    const auto fromRoots = oracle::polynomial_from_roots({e.data(), e.data() + e.size()});
    for (std::size_t k = 0; k < cp.size(); ++k)
      EXPECT_NEAR(static_cast<double>(cp[k].real()), static_cast<double>(fromRoots[k]),
                  1e-9 * (1.0 + std::abs(static_cast<double>(fromRoots[k]))));
  }
}

TEST(HermitianEigenvalues, EigenpairsReconstructRandomMatrix) {
  std::mt19937_64 rng(3);
  const auto h = oracle::random_hermitian(rng, 8);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::MatrixXcd back =
      solver.eigenvectors() * solver.eigenvalues().cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
  EXPECT_LE((back - h).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE((hermitian_eigenvalues(h) - solver.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PartialTranspose, MatchesExplicitIndexOracle) {
  std::mt19937_64 rng(5);
  const std::vector<std::size_t> dims{2, 3, 2};
  const auto rho = oracle::random_density(rng, 12, 3);
  for (std::size_t party = 0; party < 3; ++party) {
    const auto fast = partial_transpose(rho, dims, party);
    const auto slow = oracle::partial_transpose3(rho, 2, 3, 2, party);
    EXPECT_EQ((fast - slow).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(PartialTranspose, IsAnExactInvolution) {
  std::mt19937_64 rng(9);
  const std::vector<std::size_t> dims{2, 2, 2};
  const auto rho = oracle::random_density(rng, 8, 4);
  for (std::size_t party = 0; party < 3; ++party)
    EXPECT_EQ(partial_transpose(partial_transpose(rho, dims, party), dims, party), rho);
}

TEST(PartialTranspose, RejectsBadArguments) {
  const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
  EXPECT_THROW(partial_transpose(m, {2, 2, 2}, 3), std::out_of_range);
  EXPECT_THROW(partial_transpose(m, {2, 3, 2}, 0), std::invalid_argument);
}

}  // namespace
}  // namespace lpn
