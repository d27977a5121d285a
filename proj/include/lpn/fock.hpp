// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Occupation-number bases and second-quantized ladder operators.
 *
 * Kets follow the canonical ordering
 *   |n_1 ... n_L> = (c+_1)^{n_1} ... (c+_L)^{n_L} |0> / sqrt(prod n_i!)
 * so basis labels carry no sign; fermionic signs appear only when an
 * operator is applied. Modes are 0-based in this API.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpn {

using Complex = std::complex<double>;

enum class Statistics { Bosons, Fermions };

inline std::string to_string(Statistics s) {
  return s == Statistics::Bosons ? "bosons" : "fermions";
}

/// Occupation numbers of every mode plus the exchange statistics.
struct OccupationState {
  std::vector<int> occ;
  Statistics stats = Statistics::Bosons;

  std::size_t modes() const noexcept { return occ.size(); }

  int particles() const noexcept {
    return std::accumulate(occ.begin(), occ.end(), 0);
  }

  bool is_legal() const noexcept {
    return std::all_of(occ.begin(), occ.end(), [this](int n) {
      return n >= 0 && (stats == Statistics::Bosons || n <= 1);
    });
  }

  friend bool operator==(const OccupationState&, const OccupationState&) = default;
};

/// A basis ket scaled by a complex weight; the result of a ladder operator.
struct WeightedState {
  Complex weight{1.0, 0.0};
  OccupationState state;
};

namespace detail {

inline void check_mode(const OccupationState& s, std::size_t mode) {
  if (mode >= s.modes())
    throw std::out_of_range("mode " + std::to_string(mode) +
                            " outside lattice of " + std::to_string(s.modes()) +
                            " modes");
}

/// (-1)^(number of particles in modes strictly before `mode`)
inline double jordan_wigner_sign(const std::vector<int>& occ, std::size_t mode) {
  int before = 0;
  for (std::size_t j = 0; j < mode; ++j) before += occ[j];
  return (before % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace detail

/// c+_mode applied to a weighted ket. std::nullopt is the zero vector.
inline std::optional<WeightedState> apply_creation(const WeightedState& in,
                                                   std::size_t mode) {
  detail::check_mode(in.state, mode);
  WeightedState out = in;
  auto& occ = out.state.occ;
  if (in.state.stats == Statistics::Fermions) {
    if (occ[mode] != 0) return std::nullopt;
    out.weight *= detail::jordan_wigner_sign(occ, mode);
    occ[mode] = 1;
  } else {
    out.weight *= std::sqrt(static_cast<double>(occ[mode] + 1));
    occ[mode] += 1;
  }
  return out;
}

/// c_mode applied to a weighted ket. std::nullopt is the zero vector.
inline std::optional<WeightedState> apply_annihilation(const WeightedState& in,
                                                       std::size_t mode) {
  detail::check_mode(in.state, mode);
  auto occ_in = in.state.occ[mode];
  if (occ_in == 0) return std::nullopt;
  WeightedState out = in;
  auto& occ = out.state.occ;
  if (in.state.stats == Statistics::Fermions) {
    out.weight *= detail::jordan_wigner_sign(occ, mode);
  } else {
    out.weight *= std::sqrt(static_cast<double>(occ_in));
  }
  occ[mode] -= 1;
  return out;
}

/**
 * All occupation vectors of N particles on L modes, in descending
 * lexicographic order: the first mode is filled first, so a single
 * particle on three modes enumerates as (1,0,0), (0,1,0), (0,0,1).
 */
class FockBasis {
 public:
  FockBasis(int particles, std::size_t modes, Statistics stats)
      : particles_(particles), modes_(modes), stats_(stats) {
    if (particles < 0) throw std::invalid_argument("negative particle number");
    if (modes == 0) throw std::invalid_argument("a lattice needs at least one mode");
    if (stats == Statistics::Fermions && static_cast<std::size_t>(particles) > modes)
      throw std::domain_error("more fermions than modes: the Fock space is empty");

    std::vector<int> occ(modes, 0);
    fill(occ, 0, particles);
    for (std::size_t k = 0; k < states_.size(); ++k) index_.emplace(states_[k], k);
  }

  int particles() const noexcept { return particles_; }
  std::size_t modes() const noexcept { return modes_; }
  Statistics statistics() const noexcept { return stats_; }
  std::size_t size() const noexcept { return states_.size(); }

  const std::vector<std::vector<int>>& states() const noexcept { return states_; }

  OccupationState state(std::size_t k) const { return {states_.at(k), stats_}; }

  std::optional<std::size_t> find(const std::vector<int>& occ) const {
    auto it = index_.find(occ);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(const std::vector<int>& occ) const {
    if (auto k = find(occ)) return *k;
    throw std::out_of_range("occupation vector is not in this basis");
  }

 private:
  void fill(std::vector<int>& occ, std::size_t mode, int remaining) {
    if (mode + 1 == modes_) {
      if (stats_ == Statistics::Fermions && remaining > 1) return;
      occ[mode] = remaining;
      states_.push_back(occ);
      occ[mode] = 0;
      return;
    }
    int top = stats_ == Statistics::Fermions ? std::min(remaining, 1) : remaining;
    for (int n = top; n >= 0; --n) {
      occ[mode] = n;
      fill(occ, mode + 1, remaining - n);
    }
    occ[mode] = 0;
  }

  int particles_;
  std::size_t modes_;
  Statistics stats_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, std::size_t> index_;
};

inline FockBasis enumerate_basis(int particles, std::size_t modes, Statistics stats) {
  return FockBasis(particles, modes, stats);
}

/// Pure state: amplitudes over a shared, immutable basis.
struct ManyBodyState {
  std::shared_ptr<const FockBasis> basis;
  Eigen::VectorXcd amp;

  double norm() const { return amp.norm(); }

  bool is_normalized(double tol = 1e-12) const {
    return std::abs(amp.squaredNorm() - 1.0) <= tol;
  }

  static ManyBodyState basis_vector(std::shared_ptr<const FockBasis> basis,
                                    const std::vector<int>& occ) {
    ManyBodyState s{basis, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()))};
    s.amp(static_cast<Eigen::Index>(basis->index(occ))) = 1.0;
    return s;
  }
};

/**
 * Density matrix over a (possibly factored) space. `dims` lists the factor
 * dimensions; a single entry means the space is not factored.
 */
struct DensityMatrix {
  std::vector<std::size_t> dims;
  Eigen::MatrixXcd mat;

  std::size_t dimension() const {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                           std::multiplies<>());
  }

  /// Throws std::invalid_argument when shape or Hermiticity is off.
  void validate(double hermiticity_tol = 1e-12) const {
    auto d = static_cast<Eigen::Index>(dimension());
    if (mat.rows() != d || mat.cols() != d)
      throw std::invalid_argument("density matrix shape does not match its dims");
    if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > hermiticity_tol)
      throw std::invalid_argument("density matrix is not Hermitian");
  }

  Complex trace() const { return mat.trace(); }

  static DensityMatrix pure(const Eigen::VectorXcd& psi, std::vector<std::size_t> dims) {
    return {std::move(dims), psi * psi.adjoint()};
  }

  static DensityMatrix pure(const ManyBodyState& s) {
    return pure(s.amp, {s.basis->size()});
  }
};

/**
 * Expands prod_p (sum_s coeffs(p,s) c+_s)^{n_p} |0> / sqrt(prod_p n_p!) on
 * `basis`, with the product ordered like the canonical ket (mode 0 leftmost).
 * With identity coefficients this reproduces |init> exactly.
 */
inline ManyBodyState build_monomial_state(std::shared_ptr<const FockBasis> basis,
                                          const Eigen::MatrixXcd& coeffs,
                                          const OccupationState& init) {
  const std::size_t L = basis->modes();
  if (init.modes() != L || init.stats != basis->statistics() || !init.is_legal() ||
      init.particles() != basis->particles())
    throw std::invalid_argument("initial occupation does not belong to the basis");
  if (coeffs.rows() != static_cast<Eigen::Index>(L) ||
      coeffs.cols() != static_cast<Eigen::Index>(L))
    throw std::invalid_argument("coefficient matrix must be L x L");

  std::map<std::vector<int>, Complex> terms;
  terms.emplace(std::vector<int>(L, 0), Complex{1.0, 0.0});

  double factorials = 1.0;
  for (std::size_t p = L; p-- > 0;) {
    for (int rep = 0; rep < init.occ[p]; ++rep) {
      factorials *= static_cast<double>(rep + 1);
      std::map<std::vector<int>, Complex> next;
      for (const auto& [occ, w] : terms) {
        WeightedState ket{w, {occ, init.stats}};
        for (std::size_t s = 0; s < L; ++s) {
          const Complex c = coeffs(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(s));
          if (c == Complex{}) continue;
          if (auto out = apply_creation(ket, s)) next[out->state.occ] += c * out->weight;
        }
      }
      terms = std::move(next);
    }
  }

  ManyBodyState result{basis, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()))};
  const double scale = 1.0 / std::sqrt(factorials);
  for (const auto& [occ, w] : terms)
    result.amp(static_cast<Eigen::Index>(basis->index(occ))) += scale * w;
  return result;
}

}  // namespace lpn
