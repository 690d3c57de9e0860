#pragma once

#include <Eigen/Dense>

#include "jt/matrix.hpp"

namespace jt::detail {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

// Real vectorization (re, im interleaved), the coordinates in which
// Re tr(X†Y) is the Euclidean product.
inline Eigen::VectorXd realify(const ComplexMatrix& m) {
  Eigen::VectorXd v(2 * m.size());
  const cplx* d = m.data();
  for (std::size_t k = 0; k < m.size(); ++k) {
    v(2 * k) = d[k].real();
    v(2 * k + 1) = d[k].imag();
  }
  return v;
}

// Numerical rank from singular values, relative to the largest one.
inline std::size_t numerical_rank(const Eigen::MatrixXd& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

}  // namespace jt::detail
