// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <lpn/fock.hpp>

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace lpn::states {

/// One particle in equal superposition of three modes.
inline ManyBodyState single_particle_w(Statistics stats = Statistics::Fermions) {
  auto basis = std::make_shared<const FockBasis>(1, 3, stats);
  ManyBodyState s{basis, Eigen::VectorXcd::Constant(3, 1.0 / std::sqrt(3.0))};
  return s;
}

/**
 * Three fermions on six modes:
 *   cos a cos b |010101> + cos a sin b |101010>
 *     + sin a / sqrt2 (|111000> + |000111>)
 */
inline ManyBodyState phi(double alpha, double beta) {
  auto basis = std::make_shared<const FockBasis>(3, 6, Statistics::Fermions);
  ManyBodyState s{basis, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()))};
  const double r = std::sin(alpha) / std::sqrt(2.0);
  auto set = [&](const std::vector<int>& occ, double amp) {
    s.amp(static_cast<Eigen::Index>(basis->index(occ))) += amp;
  };
  set({0, 1, 0, 1, 0, 1}, std::cos(alpha) * std::cos(beta));
  set({1, 0, 1, 0, 1, 0}, std::cos(alpha) * std::sin(beta));
  set({1, 1, 1, 0, 0, 0}, r);
  set({0, 0, 0, 1, 1, 1}, r);
  return s;
}

/// First `particles` sites occupied, the rest empty.
inline OccupationState packed_left(int particles, std::size_t modes, Statistics stats) {
  if (particles < 0 || static_cast<std::size_t>(particles) > modes)
    throw std::invalid_argument("cannot place that many particles one per site");
  OccupationState s{std::vector<int>(modes, 0), stats};
  for (std::size_t i = 0; i < static_cast<std::size_t>(particles); ++i) s.occ[i] = 1;
  return s;
}

}  // namespace lpn::states
