// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <lpn/dynamics.hpp>
#include <lpn/fock.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace lpn {

/// rho_r = <c+_r c_r>
struct DensityProfile {
  Eigen::VectorXd rho;
};

/// Gamma_rs = <c+_r c+_s c_s c_r>
struct CorrelationMatrix {
  Eigen::MatrixXd gamma;
};

namespace detail {

inline void check_occupations(const Propagator& c, std::span<const int> n) {
  if (n.size() != c.modes())
    throw std::invalid_argument("initial occupations and propagator disagree on the number of modes");
  for (int v : n)
    if (v < 0) throw std::invalid_argument("negative occupation number");
}

}  // namespace detail

/// rho_r = sum_s |C_rs|^2 n_s. Identical for bosons and fermions.
inline DensityProfile single_particle_density(const Propagator& c, std::span<const int> n) {
  detail::check_occupations(c, n);
  Eigen::VectorXd occ(static_cast<Eigen::Index>(n.size()));
  for (std::size_t s = 0; s < n.size(); ++s) occ(static_cast<Eigen::Index>(s)) = n[s];
  return {c.mat.cwiseAbs2() * occ};
}

/**
 * Two-particle correlations of an initial Fock state after the walk:
 *   bosons   sum_{q<p} |C_rp C_sq + C_rq C_sp|^2 n_p n_q + sum_p |C_rp|^2 |C_sp|^2 n_p (n_p - 1)
 *   fermions sum_{q<p} |C_rp C_sq - C_rq C_sp|^2 n_p n_q
 */
inline CorrelationMatrix two_particle_correlation(const Propagator& c, std::span<const int> n,
                                                  Statistics stats) {
  detail::check_occupations(c, n);
  const auto L = static_cast<Eigen::Index>(n.size());
  if (stats == Statistics::Fermions)
    for (int v : n)
      if (v > 1) throw std::invalid_argument("fermionic occupation above one");

  const double exchange = stats == Statistics::Bosons ? 1.0 : -1.0;
  CorrelationMatrix out{Eigen::MatrixXd::Zero(L, L)};
  for (Eigen::Index r = 0; r < L; ++r) {
    for (Eigen::Index s = 0; s < L; ++s) {
      double g = 0.0;
      for (Eigen::Index p = 0; p < L; ++p) {
        const double np = n[static_cast<std::size_t>(p)];
        if (np == 0) continue;
        for (Eigen::Index q = 0; q < p; ++q) {
          const double nq = n[static_cast<std::size_t>(q)];
          if (nq == 0) continue;
          g += std::norm(c.mat(r, p) * c.mat(s, q) + exchange * c.mat(r, q) * c.mat(s, p)) * np * nq;
        }
        if (stats == Statistics::Bosons)
          g += std::norm(c.mat(r, p)) * std::norm(c.mat(s, p)) * np * (np - 1.0);
      }
      out.gamma(r, s) = g;
    }
  }
  return out;
}

/// g(delta) = sum_q Gamma_{q, q+delta}, delta = 0 .. L-1.
inline std::vector<double> interparticle_distance(const CorrelationMatrix& gamma) {
  const auto L = gamma.gamma.rows();
  std::vector<double> g(static_cast<std::size_t>(L), 0.0);
  for (Eigen::Index delta = 0; delta < L; ++delta)
    for (Eigen::Index q = 0; q + delta < L; ++q)
      g[static_cast<std::size_t>(delta)] += gamma.gamma(q, q + delta);
  return g;
}

/// coeff * c+_{creators[0]} c+_{creators[1]} ... c_{annihilators[0]} c_{annihilators[1]} ...
struct NormalOrderedTerm {
  Complex coeff{1.0, 0.0};
  std::vector<std::size_t> creators;
  std::vector<std::size_t> annihilators;

  NormalOrderedTerm adjoint() const {
    return {std::conj(coeff), {annihilators.rbegin(), annihilators.rend()},
            {creators.rbegin(), creators.rend()}};
  }
};

/// Sum of normal-ordered terms.
struct Observable {
  std::vector<NormalOrderedTerm> terms;

  /// True when the adjoint of every term appears with matching total weight.
  bool is_hermitian(double tol = 1e-14) const {
    using Key = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
    std::map<Key, Complex> weights;
    for (const auto& t : terms) weights[{t.creators, t.annihilators}] += t.coeff;
    for (const auto& [key, w] : weights) {
      auto it = weights.find({{key.second.rbegin(), key.second.rend()},
                              {key.first.rbegin(), key.first.rend()}});
      const Complex partner = it == weights.end() ? Complex{} : it->second;
      if (std::abs(w - std::conj(partner)) > tol) return false;
    }
    return true;
  }

  static Observable density(std::size_t r) { return {{{1.0, {r}, {r}}}}; }

  static Observable pair_correlation(std::size_t r, std::size_t s) {
    return {{{1.0, {r, s}, {s, r}}}};
  }

  static Observable number(std::size_t modes) {
    Observable o;
    for (std::size_t i = 0; i < modes; ++i) o.terms.push_back({1.0, {i}, {i}});
    return o;
  }
};

/// <state| O |state> by applying ladder operators on every basis ket.
inline double expectation_oracle(const ManyBodyState& state, const Observable& observable) {
  if (!observable.is_hermitian())
    throw std::invalid_argument("expectation_oracle needs a Hermitian observable");
  if (!state.is_normalized(1e-10)) throw std::invalid_argument("state is not normalized");
  const auto& basis = *state.basis;

  Complex total{};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Complex a = state.amp(static_cast<Eigen::Index>(k));
    if (a == Complex{}) continue;
    for (const auto& term : observable.terms) {
      std::optional<WeightedState> ket = WeightedState{a, basis.state(k)};
      for (auto it = term.annihilators.rbegin(); ket && it != term.annihilators.rend(); ++it)
        ket = apply_annihilation(*ket, *it);
      for (auto it = term.creators.rbegin(); ket && it != term.creators.rend(); ++it)
        ket = apply_creation(*ket, *it);
      if (!ket) continue;
      const auto row = basis.find(ket->state.occ);
      if (!row) continue;
      total += term.coeff * std::conj(state.amp(static_cast<Eigen::Index>(*row))) * ket->weight;
    }
  }
  if (std::abs(total.imag()) > 1e-12)
    throw std::runtime_error("expectation of a Hermitian observable came out complex");
  return total.real();
}

}  // namespace lpn
