#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "howe/matrix.hpp"

namespace howe {

// Floating-point embedding of an exact matrix, sending each cyclotomic entry
// to its complex value under the defining embedding of the root of unity.
inline Eigen::MatrixXcd to_complex_matrix(const CycMatrix& m) {
  Eigen::MatrixXcd r(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.at(i, j).to_complex();
  return r;
}

inline std::vector<std::complex<double>> complex_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("complex_eigenvalues: matrix must be square");
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("complex_eigenvalues: eigensolver failed to converge");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

// Eigenvalues of a matrix known on exact grounds to have real spectrum,
// sorted ascending; rejects the input if a computed eigenvalue strays from
// the real axis by more than imag_tol.
inline std::vector<double> sorted_real_eigenvalues(const Eigen::MatrixXcd& m, double imag_tol = 1e-9) {
  std::vector<std::complex<double>> ev = complex_eigenvalues(m);
  std::vector<double> out;
  out.reserve(ev.size());
  for (const auto& v : ev) {
    if (std::abs(v.imag()) > imag_tol)
      throw std::runtime_error("sorted_real_eigenvalues: eigenvalue has non-negligible imaginary part");
    out.push_back(v.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double hermitian_min_eigenvalue(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_min_eigenvalue: matrix must be square");
  if (m.rows() == 0) throw std::invalid_argument("hermitian_min_eigenvalue: empty matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_min_eigenvalue: eigensolver failed to converge");
  return solver.eigenvalues().minCoeff();
}

// Orthonormal basis of the numerical null space of m: right singular vectors
// whose singular values fall below tol relative to the largest one (or below
// tol outright when the whole matrix is tiny).
inline Eigen::MatrixXcd null_space_float(const Eigen::MatrixXcd& m, double tol = 1e-9) {
  if (m.cols() == 0) return Eigen::MatrixXcd(0, 0);
  if (m.rows() == 0) return Eigen::MatrixXcd::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index first_null = sv.size();
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) < cutoff) {
      first_null = i;
      break;
    }
  }
  // Everything past the numerical rank, including columns of V beyond the
  // number of singular values when cols > rows.
  return svd.matrixV().rightCols(m.cols() - first_null);
}

}  // namespace howe
