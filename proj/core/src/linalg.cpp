#include "rgn/linalg.hpp"

#include <cmath>

#include "rgn/rng.hpp"

namespace rgn {

void make_columns_sign_deterministic(Matrix& u) {
  for (Index j = 0; j < u.cols(); ++j) {
    Index arg = 0;
    double best = -1.0;
    for (Index i = 0; i < u.rows(); ++i) {
      const double a = std::abs(u(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (u(arg, j) < 0.0) u.col(j) = -u.col(j);
  }
}

Matrix svd_leading(const Matrix& m, Index r) {
  if (r < 0 || r > std::min(m.rows(), m.cols())) {
    throw std::invalid_argument("svd_leading: rank out of range");
  }
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  Matrix u = svd.matrixU().leftCols(r);
  make_columns_sign_deterministic(u);
  return u;
}

Vector singular_values(const Matrix& m) {
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

Matrix qr_q(const Matrix& m) {
  if (m.rows() < m.cols()) {
    throw std::invalid_argument("qr_q: expected rows >= cols");
  }
  Eigen::HouseholderQR<Matrix> qr(m);
  const Index n = m.cols();
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), n);
  const Matrix r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  const double floor = 1e-12 * m.norm();
  for (Index j = 0; j < n; ++j) {
    if (std::abs(r(j, j)) < floor) {
      throw rank_deficiency_error("qr_q: rank-deficient input");
    }
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

Matrix orthonormal_complement(const Matrix& u) {
  const Index p = u.rows();
  const Index r = u.cols();
  if (r > p) throw std::invalid_argument("orthonormal_complement: more columns than rows");
  if (r == p) return Matrix(p, 0);
  // Fixed seed keeps the complement rerun-stable for a given input basis.
  Rng rng(0x7c6f0a52d1e84b93ULL);
  Matrix extended(p, p);
  extended.leftCols(r) = u;
  extended.rightCols(p - r) = rng.gaussian_matrix(p, p - r);
  Eigen::HouseholderQR<Matrix> qr(extended);
  Matrix full = qr.householderQ() * Matrix::Identity(p, p);
  Matrix comp = full.rightCols(p - r);
  make_columns_sign_deterministic(comp);
  return comp;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix colex_kron(std::span<const Matrix> mats) {
  if (mats.empty()) return Matrix::Identity(1, 1);
  Matrix out = mats[0];
  for (std::size_t k = 1; k < mats.size(); ++k) out = kron(mats[k], out);
  return out;
}

Vector colex_kron_vec(std::span<const Vector> vs) {
  if (vs.empty()) return Vector::Ones(1);
  Vector out = vs[0];
  for (std::size_t k = 1; k < vs.size(); ++k) {
    Vector next(out.size() * vs[k].size());
    for (Index i = 0; i < vs[k].size(); ++i) {
      next.segment(i * out.size(), out.size()) = vs[k][i] * out;
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace rgn
