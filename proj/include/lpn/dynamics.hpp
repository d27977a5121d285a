// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dynamics.hpp
 * @brief Tight-binding chain with reflecting ends and its quantum walk.
 *
 *   H = G sum_i c+_i c_i + T sum_{i<L} (c+_i c_{i+1} + c+_{i+1} c_i)
 *
 * Time is the dimensionless tau = t T / hbar throughout.
 */

#pragma once

#include <lpn/fock.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace lpn {

struct LatticeParams {
  std::size_t modes = 6;
  double onsite = 0.0;     ///< G
  double tunneling = 1.0;  ///< T, nonzero

  void validate() const {
    if (modes == 0) throw std::invalid_argument("lattice needs at least one mode");
    if (tunneling == 0.0 || !std::isfinite(tunneling))
      throw std::invalid_argument("tunneling rate must be finite and nonzero");
    if (!std::isfinite(onsite)) throw std::invalid_argument("on-site energy must be finite");
  }
};

/// mat(r, s): amplitude for a particle to go from site s to site r in time tau.
struct Propagator {
  double tau = 0.0;
  Eigen::MatrixXcd mat;

  std::size_t modes() const noexcept { return static_cast<std::size_t>(mat.rows()); }
};

/**
 * Closed-form propagator of the open chain,
 *   C_rs = 2/(L+1) e^{-i G tau / T} sum_k e^{-2 i tau cos(k pi/(L+1))}
 *          sin(r k pi/(L+1)) sin(s k pi/(L+1)),
 * sites and k running over 1..L.
 */
inline Propagator single_particle_propagator(const LatticeParams& params, double tau) {
  params.validate();
  if (!std::isfinite(tau)) throw std::invalid_argument("tau must be finite");
  const auto L = static_cast<Eigen::Index>(params.modes);
  const double q = std::numbers::pi / static_cast<double>(L + 1);

  // Columns of `modes` are the normalized standing waves.
  Eigen::MatrixXd modes(L, L);
  Eigen::VectorXcd phases(L);
  for (Eigen::Index k = 1; k <= L; ++k) {
    phases(k - 1) = std::exp(Complex{0.0, -2.0 * tau * std::cos(static_cast<double>(k) * q)});
    for (Eigen::Index r = 1; r <= L; ++r)
      modes(r - 1, k - 1) = std::sin(static_cast<double>(r * k) * q);
  }
  const Complex global =
      2.0 / static_cast<double>(L + 1) *
      std::exp(Complex{0.0, -params.onsite * tau / params.tunneling});

  Propagator c{tau, Eigen::MatrixXcd(L, L)};
  c.mat.noalias() = modes.cast<Complex>() * phases.asDiagonal() * modes.transpose().cast<Complex>();
  c.mat *= global;
  return c;
}

/// Matrix of H on `basis`, assembled from ladder-operator action. Real symmetric.
inline Eigen::MatrixXd many_body_hamiltonian(const FockBasis& basis, const LatticeParams& params) {
  params.validate();
  if (basis.modes() != params.modes)
    throw std::invalid_argument("basis and lattice disagree on the number of modes");
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  auto add_hop = [&](Eigen::Index col, const OccupationState& ket, std::size_t to, std::size_t from) {
    auto moved = apply_annihilation(WeightedState{1.0, ket}, from);
    if (!moved) return;
    moved = apply_creation(*moved, to);
    if (!moved) return;
    auto row = static_cast<Eigen::Index>(basis.index(moved->state.occ));
    h(row, col) += params.tunneling * moved->weight.real();
  };

  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto ket = basis.state(static_cast<std::size_t>(col));
    h(col, col) += params.onsite * ket.particles();
    for (std::size_t i = 0; i + 1 < params.modes; ++i) {
      add_hop(col, ket, i, i + 1);
      add_hop(col, ket, i + 1, i);
    }
  }
  return h;
}

/**
 * Schroedinger-picture state at `tau`: each initial creation operator c+_p
 * is replaced by sum_s C_sp c+_s, i.e. the column p of the propagator.
 */
inline ManyBodyState evolve_state(const OccupationState& init, const LatticeParams& params,
                                  double tau) {
  if (init.modes() != params.modes)
    throw std::invalid_argument("initial state and lattice disagree on the number of modes");
  auto basis = std::make_shared<const FockBasis>(init.particles(), init.modes(), init.stats);
  const auto c = single_particle_propagator(params, tau);
  return build_monomial_state(basis, c.mat.transpose(), init);
}

/**
 * Exact evolution by dense diagonalization of the many-body Hamiltonian.
 * Decompose once and evolve to many times; this path never touches the
 * single-particle propagator.
 */
class SpectralEvolution {
 public:
  static constexpr std::size_t max_dimension = 1000;

  SpectralEvolution(std::shared_ptr<const FockBasis> basis, const LatticeParams& params)
      : basis_(std::move(basis)), tunneling_(params.tunneling) {
    if (basis_->size() > max_dimension)
      throw std::length_error("Fock space too large for dense diagonalization");
    hamiltonian_ = many_body_hamiltonian(*basis_, params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian_);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hamiltonian diagonalization failed");
    energies_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
  }

  const std::shared_ptr<const FockBasis>& basis() const noexcept { return basis_; }
  const Eigen::MatrixXd& hamiltonian() const noexcept { return hamiltonian_; }
  const Eigen::VectorXd& energies() const noexcept { return energies_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return vectors_; }

  /// max |V diag(E) V^T - H|
  double reconstruction_error() const {
    return (vectors_ * energies_.asDiagonal() * vectors_.transpose() - hamiltonian_)
        .cwiseAbs()
        .maxCoeff();
  }

  /// exp(-i H tau / T) |psi0>
  ManyBodyState evolve(const Eigen::VectorXcd& psi0, double tau) const {
    Eigen::VectorXcd overlaps = vectors_.transpose().cast<Complex>() * psi0;
    for (Eigen::Index k = 0; k < overlaps.size(); ++k)
      overlaps(k) *= std::exp(Complex{0.0, -energies_(k) * tau / tunneling_});
    return {basis_, vectors_.cast<Complex>() * overlaps};
  }

  ManyBodyState evolve(const OccupationState& init, double tau) const {
    return evolve(ManyBodyState::basis_vector(basis_, init.occ).amp, tau);
  }

 private:
  std::shared_ptr<const FockBasis> basis_;
  double tunneling_;
  Eigen::MatrixXd hamiltonian_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
};

inline ManyBodyState evolve_state_oracle(const OccupationState& init, const LatticeParams& params,
                                         double tau) {
  if (init.modes() != params.modes)
    throw std::invalid_argument("initial state and lattice disagree on the number of modes");
  auto basis = std::make_shared<const FockBasis>(init.particles(), init.modes(), init.stats);
  return SpectralEvolution(basis, params).evolve(init, tau);
}

}  // namespace lpn
