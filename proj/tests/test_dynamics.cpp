// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

#include <lpn/dynamics.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace lpn {
namespace {

const OccupationState kInitF{{1, 1, 1, 0, 0, 0}, Statistics::Fermions};
const OccupationState kInitB{{1, 1, 1, 0, 0, 0}, Statistics::Bosons};

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Propagator, IdentityAtTimeZero) {
  for (double g : {0.0, 1.3}) {
    const auto c = single_particle_propagator({6, g, 0.7}, 0.0);
    EXPECT_LE(max_abs(c.mat - Eigen::MatrixXcd::Identity(6, 6)), 1e-14);
  }
}

TEST(Propagator, UnitaryAndSymmetric) {
  for (double tau : {0.3, 2.0, 8.7, 19.1}) {
    for (std::size_t L : {2u, 6u, 9u}) {
      const auto c = single_particle_propagator({L, 0.4, 1.0}, tau);
      const auto n = static_cast<Eigen::Index>(L);
      EXPECT_LE(max_abs(c.mat * c.mat.adjoint() - Eigen::MatrixXcd::Identity(n, n)), 1e-12);
      EXPECT_LE(max_abs(c.mat - c.mat.transpose()), 1e-12);
    }
  }
}

TEST(Propagator, MatchesEigendecompositionOfTheChain) {
  const LatticeParams params{6, 0.0, 1.0};
  const auto basis = std::make_shared<const FockBasis>(1, 6, Statistics::Bosons);
  const SpectralEvolution oracle(basis, params);
  const auto c = single_particle_propagator(params, 1.0);
  for (std::size_t s = 0; s < 6; ++s) {
    std::vector<int> occ(6, 0);
    occ[s] = 1;
    const auto column = oracle.evolve(OccupationState{occ, Statistics::Bosons}, 1.0);
    // Single-particle basis index k is the particle on site k.
    EXPECT_LE((column.amp - c.mat.col(static_cast<Eigen::Index>(s))).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Propagator, MatchesTaylorExponentialWithOnsiteAndScaledTunneling) {
  const LatticeParams params{7, 0.9, 1.7};
  const double tau = 3.2;
  const auto c = single_particle_propagator(params, tau);
  const auto h = oracle::chain_matrix(7, params.onsite, params.tunneling);
  EXPECT_LE(max_abs(c.mat - oracle::expm_taylor(h, tau / params.tunneling)), 1e-12);
}

TEST(Hamiltonian, TwoSiteSingleParticle) {
  const auto h = many_body_hamiltonian(enumerate_basis(1, 2, Statistics::Fermions), {2, 0.0, 0.8});
  Eigen::MatrixXd expected(2, 2);
  expected << 0.0, 0.8, 0.8, 0.0;
  EXPECT_EQ(h, expected);
}

TEST(Hamiltonian, DiagonalIsParticleNumberTimesOnsite) {
  for (auto stats : {Statistics::Bosons, Statistics::Fermions}) {
    const auto h = many_body_hamiltonian(enumerate_basis(3, 6, stats), {6, 0.35, 1.0});
    for (Eigen::Index k = 0; k < h.rows(); ++k) EXPECT_NEAR(h(k, k), 3 * 0.35, 1e-15);
    EXPECT_EQ(h, h.transpose());
  }
}

TEST(Hamiltonian, FreeFermionSpectrum) {
  const double g = 0.2, t = 1.3;
  const SpectralEvolution spectral(std::make_shared<const FockBasis>(3, 6, Statistics::Fermions), {6, g, t});
  const auto expected = oracle::free_fermion_spectrum(6, 3, g, t);
  ASSERT_EQ(expected.size(), 20u);
  for (std::size_t k = 0; k < expected.size(); ++k)
    EXPECT_NEAR(spectral.energies()(static_cast<Eigen::Index>(k)), expected[k], 1e-12);
  EXPECT_LE(spectral.reconstruction_error(), 1e-10);
}

TEST(Hamiltonian, RejectsMismatchedLattice) {
  EXPECT_THROW(many_body_hamiltonian(enumerate_basis(1, 5, Statistics::Bosons), {6, 0.0, 1.0}),
               std::invalid_argument);
  EXPECT_THROW(many_body_hamiltonian(enumerate_basis(1, 6, Statistics::Bosons), {6, 0.0, 0.0}),
               std::invalid_argument);
}

TEST(Evolution, TimeZeroIsTheInitialKet) {
  for (const auto& init : {kInitF, kInitB}) {
    const auto psi = evolve_state(init, {6, 0.0, 1.0}, 0.0);
    const auto ref = ManyBodyState::basis_vector(psi.basis, init.occ);
    EXPECT_LE((psi.amp - ref.amp).cwiseAbs().maxCoeff(), 1e-14);
    const auto oracle = evolve_state_oracle(init, {6, 0.0, 1.0}, 0.0);
    EXPECT_LE((oracle.amp - ref.amp).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Evolution, AgreesWithSpectralOracleAt8p7) {
  for (const auto& init : {kInitF, kInitB}) {
    const auto psi = evolve_state(init, {6, 0.0, 1.0}, 8.7);
    const auto ref = evolve_state_oracle(init, {6, 0.0, 1.0}, 8.7);
    EXPECT_LE((psi.amp - ref.amp).norm(), 1e-10) << to_string(init.stats);
  }
}

TEST(Evolution, RandomTimesPreserveNormAndEnergyAndMatchOracle) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> tau(0.0, 20.0);
  for (const auto& init : {kInitF, kInitB, OccupationState{{2, 0, 1, 0, 1}, Statistics::Bosons}}) {
    const LatticeParams params{init.modes(), 0.25, 1.0};
    const SpectralEvolution spectral(std::make_shared<const FockBasis>(init.particles(), init.modes(), init.stats),
                                     params);
    const auto h = spectral.hamiltonian().cast<Complex>();
    const auto psi0 = ManyBodyState::basis_vector(spectral.basis(), init.occ);
    const double e0 = (psi0.amp.adjoint() * h * psi0.amp)(0).real();
    for (int k = 0; k < 10; ++k) {
      const double t = tau(rng);
      const auto psi = evolve_state(init, params, t);
      EXPECT_NEAR(psi.amp.norm(), 1.0, 1e-12);
      EXPECT_LE((psi.amp - spectral.evolve(init, t).amp).norm(), 1e-10);
      EXPECT_NEAR((psi.amp.adjoint() * h * psi.amp)(0).real(), e0, 1e-10);
    }
  }
}

TEST(Evolution, OnsiteEnergyIsAGlobalPhase) {
  const double tau = 5.3;
  const auto a = evolve_state(kInitF, {6, 0.0, 1.0}, tau);
  const auto b = evolve_state(kInitF, {6, 1.7, 1.0}, tau);
  const Complex phase = std::exp(Complex{0.0, -3.0 * 1.7 * tau});
  EXPECT_LE((b.amp - phase * a.amp).norm(), 1e-12);
}

TEST(Evolution, OracleGuardsDimension) {
  // C(16+4-1, 4) = 3876 states
  const OccupationState big{{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, Statistics::Bosons};
  EXPECT_THROW(evolve_state_oracle(big, {16, 0.0, 1.0}, 1.0), std::length_error);
}

}  // namespace
}  // namespace lpn
