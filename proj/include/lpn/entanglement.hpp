// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file entanglement.hpp
 * @brief Tripartite entanglement of identical particles under the local
 *        particle-number superselection rule, and the mode-based geometric
 *        measure it is contrasted with.
 *
 * A state is split into sectors of definite local particle numbers
 * (n_A, n_B, n_C). Each sector is written on the product of the parties'
 * local Fock spaces, normalized, and scored with the tripartite negativity
 * (geometric mean of the three one-vs-rest negativities). The entanglement
 * of particles is the probability-weighted sum of those scores.
 */

#pragma once

#include <lpn/fock.hpp>
#include <lpn/linalg.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpn {

inline constexpr std::size_t kParties = 3;
using Counts = std::array<int, kParties>;

/// Three disjoint, non-empty mode lists covering the lattice. 0-based modes.
struct Partition {
  std::array<std::vector<std::size_t>, kParties> parties;
  std::array<std::string, kParties> labels{"A", "B", "C"};

  std::size_t modes() const {
    std::size_t n = 0;
    for (const auto& p : parties) n += p.size();
    return n;
  }

  /// Throws std::invalid_argument unless the parties tile {0..L-1}.
  void validate(std::size_t lattice_modes) const {
    std::set<std::size_t> seen;
    for (const auto& p : parties) {
      if (p.empty()) throw std::invalid_argument("partition has an empty party");
      for (auto m : p) {
        if (m >= lattice_modes)
          throw std::invalid_argument("partition mode " + std::to_string(m + 1) +
                                      " is outside the lattice");
        if (!seen.insert(m).second)
          throw std::invalid_argument("partition mode " + std::to_string(m + 1) +
                                      " appears twice");
      }
    }
    if (seen.size() != lattice_modes)
      throw std::invalid_argument("partition does not cover every mode");
  }

  /// Parses "1,2|3,4|5,6" (1-based modes, pipe-separated parties).
  static Partition parse(const std::string& spec, std::size_t lattice_modes) {
    if (!spec.empty() && (spec.back() == '|' || spec.back() == ','))
      throw std::invalid_argument("partition spec ends with a separator");
    Partition part;
    std::size_t party = 0;
    std::string group;
    std::istringstream groups(spec);
    while (std::getline(groups, group, '|')) {
      if (party == kParties) throw std::invalid_argument("partition needs exactly three parties");
      if (!group.empty() && group.back() == ',') throw std::invalid_argument("empty partition entry");
      std::istringstream items(group);
      std::string item;
      while (std::getline(items, item, ',')) {
        std::size_t used = 0;
        long mode = 0;
        try {
          mode = std::stol(item, &used);
        } catch (const std::exception&) {
          throw std::invalid_argument("malformed partition entry '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size() || mode < 1)
          throw std::invalid_argument("malformed partition entry '" + item + "'");
        part.parties[party].push_back(static_cast<std::size_t>(mode - 1));
      }
      ++party;
    }
    if (party != kParties) throw std::invalid_argument("partition needs exactly three parties");
    part.validate(lattice_modes);
    return part;
  }

  /// Inverse of parse().
  std::string to_string() const {
    std::string out;
    for (std::size_t p = 0; p < kParties; ++p) {
      if (p) out += '|';
      for (std::size_t k = 0; k < parties[p].size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parties[p][k] + 1);
      }
    }
    return out;
  }
};

/// Particles held by each party for a given occupation vector.
inline Counts local_counts(const std::vector<int>& occ, const Partition& part) {
  Counts n{};
  for (std::size_t p = 0; p < kParties; ++p)
    for (auto m : part.parties[p]) n[p] += occ[m];
  return n;
}

/**
 * Sign relating the canonical (globally ascending) fermionic ket to the
 * party-blocked product ket: the parity of the creation sequence obtained by
 * listing occupied modes party by party, each in its partition order.
 * Always +1 for bosons.
 */
inline int blocked_order_sign(const std::vector<int>& occ, const Partition& part,
                              Statistics stats) {
  if (stats == Statistics::Bosons) return 1;
  std::vector<std::size_t> sequence;
  for (const auto& p : part.parties)
    for (auto m : p)
      if (occ[m]) sequence.push_back(m);
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (sequence[i] > sequence[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

/// Fixed local particle numbers and the parties' local Fock bases.
struct Sector {
  Counts counts{};
  std::vector<FockBasis> local;  ///< empty when some fermionic n_I exceeds its modes

  bool admissible() const noexcept { return local.size() == kParties; }

  std::vector<std::size_t> dims() const {
    if (!admissible()) return {0, 0, 0};
    return {local[0].size(), local[1].size(), local[2].size()};
  }

  static Sector make(const Partition& part, Counts counts, Statistics stats) {
    Sector s{counts, {}};
    for (std::size_t p = 0; p < kParties; ++p) {
      if (counts[p] < 0) throw std::invalid_argument("negative local particle number");
      if (stats == Statistics::Fermions &&
          static_cast<std::size_t>(counts[p]) > part.parties[p].size())
        return s;
    }
    for (std::size_t p = 0; p < kParties; ++p)
      s.local.emplace_back(counts[p], part.parties[p].size(), stats);
    return s;
  }

  /// Index into the A x B x C product basis (A slowest).
  std::size_t product_index(const std::vector<int>& occ, const Partition& part) const {
    std::size_t index = 0;
    for (std::size_t p = 0; p < kParties; ++p) {
      std::vector<int> pattern;
      pattern.reserve(part.parties[p].size());
      for (auto m : part.parties[p]) pattern.push_back(occ[m]);
      index = index * local[p].size() + local[p].index(pattern);
    }
    return index;
  }
};

/// Sector projection: probability and, when nonzero, the normalized block.
struct SectorState {
  Sector sector;
  double prob = 0.0;
  std::optional<DensityMatrix> rho;
};

/// Probabilities at or below this are treated as empty sectors.
inline constexpr double kSectorCutoff = 1e-14;

namespace detail {

struct SectorEntry {
  Eigen::Index global;
  Eigen::Index product;
  double sign;
};

inline std::vector<SectorEntry> sector_entries(const FockBasis& basis, const Partition& part,
                                               const Sector& sector) {
  std::vector<SectorEntry> entries;
  if (!sector.admissible()) return entries;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& occ = basis.states()[k];
    if (local_counts(occ, part) != sector.counts) continue;
    entries.push_back({static_cast<Eigen::Index>(k),
                       static_cast<Eigen::Index>(sector.product_index(occ, part)),
                       static_cast<double>(blocked_order_sign(occ, part, basis.statistics()))});
  }
  return entries;
}

inline void check_projection_args(const FockBasis& basis, const Partition& part,
                                  const Counts& counts) {
  part.validate(basis.modes());
  int total = 0;
  for (auto n : counts) total += n;
  if (total != basis.particles())
    throw std::invalid_argument("sector particle numbers do not add up to N");
}

}  // namespace detail

/// Pi rho Pi for a pure state, re-expressed on the parties' product basis.
inline SectorState project_sector(const ManyBodyState& state, const Partition& part,
                                  const Counts& counts) {
  const auto& basis = *state.basis;
  detail::check_projection_args(basis, part, counts);
  SectorState out{Sector::make(part, counts, basis.statistics()), 0.0, std::nullopt};
  if (!out.sector.admissible()) return out;

  const auto dims = out.sector.dims();
  Eigen::VectorXcd block = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dims[0] * dims[1] * dims[2]));
  for (const auto& e : detail::sector_entries(basis, part, out.sector))
    block(e.product) += e.sign * state.amp(e.global);

  out.prob = block.squaredNorm();
  if (out.prob > kSectorCutoff) {
    block /= std::sqrt(out.prob);
    out.rho = DensityMatrix::pure(block, dims);
  }
  return out;
}

/// Pi rho Pi for a density matrix given on the full Fock basis.
inline SectorState project_sector(const DensityMatrix& rho, const FockBasis& basis,
                                  const Partition& part, const Counts& counts) {
  detail::check_projection_args(basis, part, counts);
  if (rho.mat.rows() != static_cast<Eigen::Index>(basis.size()) || rho.mat.cols() != rho.mat.rows())
    throw std::invalid_argument("density matrix does not live on this basis");
  SectorState out{Sector::make(part, counts, basis.statistics()), 0.0, std::nullopt};
  if (!out.sector.admissible()) return out;

  const auto dims = out.sector.dims();
  const auto dim = static_cast<Eigen::Index>(dims[0] * dims[1] * dims[2]);
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(dim, dim);
  const auto entries = detail::sector_entries(basis, part, out.sector);
  for (const auto& r : entries)
    for (const auto& c : entries)
      block(r.product, c.product) += r.sign * c.sign * rho.mat(r.global, c.global);

  out.prob = block.trace().real();
  if (out.prob > kSectorCutoff) out.rho = DensityMatrix{dims, block / out.prob};
  return out;
}

/// Every (n_A, n_B, n_C) with n_A + n_B + n_C = N, n_A descending first.
inline std::vector<Counts> all_sectors(int particles) {
  std::vector<Counts> out;
  for (int a = particles; a >= 0; --a)
    for (int b = particles - a; b >= 0; --b) out.push_back({a, b, particles - a - b});
  return out;
}

inline DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t party) {
  return {rho.dims, partial_transpose(rho.mat, rho.dims, party)};
}

/// Magnitude below which a negativity is reported as exactly zero.
inline constexpr double kNegativityFloor = 1e-12;

/// sum_i |eig_i(rho^{T_party})| - 1
inline double bipartite_negativity(const DensityMatrix& rho, std::size_t party) {
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > 1e-10)
    throw std::invalid_argument("negativity needs a unit-trace density matrix");
  const auto eig = hermitian_eigenvalues(partial_transpose(rho.mat, rho.dims, party));
  const double value = eig.cwiseAbs().sum() - 1.0;
  return std::abs(value) <= kNegativityFloor ? 0.0 : value;
}

inline std::array<double, kParties> cut_negativities(const DensityMatrix& rho) {
  if (rho.dims.size() != kParties) throw std::invalid_argument("expected a three-party density matrix");
  return {bipartite_negativity(rho, 0), bipartite_negativity(rho, 1), bipartite_negativity(rho, 2)};
}

inline double geometric_mean(const std::array<double, kParties>& cuts) {
  for (double n : cuts)
    if (n <= 0.0) return 0.0;
  return std::cbrt(cuts[0] * cuts[1] * cuts[2]);
}

/// Geometric mean of the three one-vs-rest negativities.
inline double tripartite_negativity(const DensityMatrix& rho) {
  return geometric_mean(cut_negativities(rho));
}

struct SectorRecord {
  Counts counts{};
  double prob = 0.0;
  std::array<double, kParties> negativity{};  ///< N_{A-BC}, N_{B-AC}, N_{C-AB}
  double tpn = 0.0;
};

struct EntanglementReport {
  std::vector<SectorRecord> sectors;
  double eps_T = 0.0;
  std::optional<double> eps_G;

  /// Record for the given local particle numbers, if that sector was populated.
  const SectorRecord* find(const Counts& counts) const {
    for (const auto& s : sectors)
      if (s.counts == counts) return &s;
    return nullptr;
  }
};

namespace detail {

/**
 * Scores one normalized sector block. A party whose local space is
 * one-dimensional (no particles, or no room left) is in a fixed pure state,
 * so its cut is exactly product and the sector contributes nothing.
 */
inline SectorRecord score_sector(const SectorState& s) {
  SectorRecord rec{s.sector.counts, s.prob, {}, 0.0};
  const auto dims = s.sector.dims();
  for (std::size_t p = 0; p < kParties; ++p)
    if (dims[p] > 1) rec.negativity[p] = bipartite_negativity(*s.rho, p);
  rec.tpn = geometric_mean(rec.negativity);
  return rec;
}

template <class Project>
EntanglementReport sum_over_sectors(int particles, Project&& project) {
  EntanglementReport report;
  for (const auto& counts : all_sectors(particles)) {
    const SectorState s = project(counts);
    if (s.prob <= kSectorCutoff || !s.rho) continue;
    report.sectors.push_back(score_sector(s));
    report.eps_T += s.prob * report.sectors.back().tpn;
  }
  return report;
}

}  // namespace detail

/// eps_T = sum over sectors of P_{nA,nB,nC} * TPN(rho_{nA,nB,nC}).
inline EntanglementReport entanglement_of_particles(const ManyBodyState& state,
                                                    const Partition& part) {
  part.validate(state.basis->modes());
  return detail::sum_over_sectors(state.basis->particles(), [&](const Counts& counts) {
    return project_sector(state, part, counts);
  });
}

inline EntanglementReport entanglement_of_particles(const DensityMatrix& rho, const FockBasis& basis,
                                                    const Partition& part) {
  part.validate(basis.modes());
  return detail::sum_over_sectors(basis.particles(), [&](const Counts& counts) {
    return project_sector(rho, basis, part, counts);
  });
}

/**
 * Traceless Hermitian generators of SU(d): symmetric, antisymmetric, then
 * diagonal generalized Gell-Mann matrices, scaled so Tr(l_a l_b) = norm d_ab.
 * d = 2 with norm 2 gives the Pauli matrices in the order X, Y, Z.
 */
inline std::vector<Eigen::MatrixXcd> su_generators(std::size_t d, double norm = 2.0) {
  const auto n = static_cast<Eigen::Index>(d);
  const double scale = std::sqrt(norm / 2.0);
  std::vector<Eigen::MatrixXcd> out;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
      m(j, k) = m(k, j) = scale;
      out.push_back(m);
    }
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
      m(j, k) = Complex{0.0, -scale};
      m(k, j) = Complex{0.0, scale};
      out.push_back(m);
    }
  for (Eigen::Index l = 1; l < n; ++l) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    const double c = scale * std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) m(j, j) = c;
    m(l, l) = -c * static_cast<double>(l);
    out.push_back(m);
  }
  return out;
}

namespace detail {

/// Applies `op` to factor `party` of a vector on dims[0] x dims[1] x dims[2].
inline Eigen::VectorXcd apply_local(const Eigen::VectorXcd& psi, const std::array<std::size_t, 3>& dims,
                                    std::size_t party, const Eigen::MatrixXcd& op) {
  std::size_t inner = 1;
  for (std::size_t k = party + 1; k < dims.size(); ++k) inner *= dims[k];
  const std::size_t d = dims[party];
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  for (std::size_t i = 0; i < static_cast<std::size_t>(psi.size()); ++i) {
    const std::size_t local = (i / inner) % d;
    const std::size_t base = i - local * inner;
    Complex acc{};
    for (std::size_t x = 0; x < d; ++x)
      acc += op(static_cast<Eigen::Index>(local), static_cast<Eigen::Index>(x)) *
             psi(static_cast<Eigen::Index>(base + x * inner));
    out(static_cast<Eigen::Index>(i)) = acc;
  }
  return out;
}

}  // namespace detail

/// ||tau|| normalization for parties of one or two modes.
struct GeometricConstants {
  double prefactor;
  double separable_norm;
};

inline GeometricConstants geometric_constants(std::size_t party_modes) {
  if (party_modes == 1) return {1.0, 1.0};
  if (party_modes == 2) return {8.0, 6.0 * std::sqrt(6.0)};
  throw std::invalid_argument("geometric measure supports parties of one or two modes");
}

/**
 * Maps a state with occupations in {0,1} onto the mode-qubit space, ordered
 * party-blocked: within a party, earlier modes in the partition list are more
 * significant bits.
 */
inline Eigen::VectorXcd mode_qubit_vector(const ManyBodyState& state, const Partition& part) {
  part.validate(state.basis->modes());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index{1} << state.basis->modes());
  for (std::size_t k = 0; k < state.basis->size(); ++k) {
    const auto& occ = state.basis->states()[k];
    std::size_t index = 0;
    for (const auto& p : part.parties)
      for (auto m : p) {
        if (occ[m] > 1)
          throw std::invalid_argument("mode-qubit mapping needs occupations of 0 or 1");
        index = (index << 1) | static_cast<std::size_t>(occ[m]);
      }
    out(static_cast<Eigen::Index>(index)) += state.amp(static_cast<Eigen::Index>(k));
  }
  return out;
}

/// ||tau|| from the generator-expectation tensor; see geometric_measure().
inline double correlation_tensor_norm(const ManyBodyState& state, const Partition& part) {
  const std::size_t m = part.parties[0].size();
  for (const auto& p : part.parties)
    if (p.size() != m) throw std::invalid_argument("geometric measure needs equal-size parties");
  const auto constants = geometric_constants(m);

  const std::size_t d = std::size_t{1} << m;
  const std::array<std::size_t, 3> dims{d, d, d};
  static const auto pauli = su_generators(2, 2.0);
  static const auto su4 = su_generators(4, 4.0);
  const auto& gens = m == 1 ? pauli : su4;
  const Eigen::VectorXcd psi = mode_qubit_vector(state, part);

  const auto g = static_cast<Eigen::Index>(gens.size());
  Eigen::MatrixXcd left(psi.size(), g);
  Eigen::MatrixXcd right(psi.size(), g * g);
  for (Eigen::Index k = 0; k < g; ++k) {
    left.col(k) = detail::apply_local(psi, dims, 0, gens[static_cast<std::size_t>(k)]);
    const Eigen::VectorXcd on_c = detail::apply_local(psi, dims, 2, gens[static_cast<std::size_t>(k)]);
    for (Eigen::Index j = 0; j < g; ++j)
      right.col(j * g + k) = detail::apply_local(on_c, dims, 1, gens[static_cast<std::size_t>(j)]);
  }
  // <psi| l_i x l_j x l_k |psi> = <l_i psi | (1 x l_j x l_k) psi>
  const Eigen::MatrixXcd tensor = left.adjoint() * right;
  return std::sqrt(constants.prefactor * tensor.cwiseAbs2().sum());
}

/**
 * Mode-entanglement measure eps_G = ||tau|| - ||tau||_sep for pure states.
 * Parties of one mode use the Pauli matrices; parties of two modes use the
 * fifteen SU(4) generators normalized to Tr(l_a l_b) = 4 d_ab, with the
 * prefactor 8 and separable norm 6 sqrt(6). Any pure product state scores 0.
 */
inline double geometric_measure(const ManyBodyState& state, const Partition& part) {
  const auto constants = geometric_constants(part.parties[0].size());
  return correlation_tensor_norm(state, part) - constants.separable_norm;
}

}  // namespace lpn
