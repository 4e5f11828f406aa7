#pragma once

#include <vector>

#include "projcert/types.hpp"

namespace projcert::detail {

// Orthonormal basis of the column span, rank-revealing.
inline Matrix orth(const Matrix& a, double tol = 1e-12) {
  if (a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  qr.setThreshold(tol);
  Eigen::Index r = qr.rank();
  return qr.householderQ() * Matrix::Identity(a.rows(), r);
}

inline Matrix columns(const std::vector<Vector>& vs, Eigen::Index n) {
  Matrix m(n, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(i) = vs[i];
  return m;
}

// Orthonormal basis of the orthogonal complement of span(b), b orthonormal.
inline Matrix complement(const Matrix& b) {
  Eigen::Index n = b.rows(), k = b.cols();
  if (k == 0) return Matrix::Identity(n, n);
  Eigen::HouseholderQR<Matrix> qr(b);
  Matrix q = qr.householderQ();
  return q.rightCols(n - k);
}

// Residual of v against the span of orthonormal columns b.
inline double off_span_norm(const Matrix& b, const Vector& v) {
  if (b.cols() == 0) return v.norm();
  return (v - b * (b.transpose() * v)).norm();
}

}  // namespace projcert::detail
