// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lpn {

/// Largest |A - A^dagger| entry.
inline double hermiticity_defect(const Eigen::MatrixXcd& mat) {
  if (mat.size() == 0) return 0.0;
  return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
}

/**
 * All eigenvalues of a Hermitian matrix, ascending.
 *
 * Input must be Hermitian to within `tol`; the residual anti-Hermitian part
 * is dropped before the dense solve.
 */
inline Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& mat, double tol = 1e-10) {
  if (mat.rows() != mat.cols()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  if (hermiticity_defect(mat) > tol)
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  Eigen::MatrixXcd sym = 0.5 * (mat + mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  return solver.eigenvalues();
}

/**
 * Transposes the indices of factor `party` in a matrix acting on
 * dims[0] x dims[1] x ... (row-major tensor index, first factor slowest).
 */
inline Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& mat,
                                          const std::vector<std::size_t>& dims,
                                          std::size_t party) {
  if (party >= dims.size()) throw std::out_of_range("partial transpose: party index");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (mat.rows() != static_cast<Eigen::Index>(total) || mat.cols() != mat.rows())
    throw std::invalid_argument("partial transpose: dims do not match matrix");

  // index = (outer * d + local) * inner + rest
  std::size_t inner = 1;
  for (std::size_t k = party + 1; k < dims.size(); ++k) inner *= dims[k];
  const std::size_t d = dims[party];

  Eigen::MatrixXcd out(mat.rows(), mat.cols());
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t li = (i / inner) % d;
    for (std::size_t j = 0; j < total; ++j) {
      const std::size_t lj = (j / inner) % d;
      const std::size_t ti = i + (lj - li) * inner;
      const std::size_t tj = j + (li - lj) * inner;
      out(static_cast<Eigen::Index>(ti), static_cast<Eigen::Index>(tj)) =
          mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

}  // namespace lpn
