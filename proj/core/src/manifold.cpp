#include "rgn/manifold.hpp"

#include <cmath>

#include "rgn/linalg.hpp"
#include "rgn/measurement.hpp"

namespace rgn {

namespace {

constexpr double kCoreRankTol = 1e-12;

void check_same_basis(const TangentVector& v, const TangentBasis& basis) {
  if (v.basis != &basis) {
    throw std::invalid_argument("tangent vector does not belong to this basis");
  }
}

// Columns of W_k are the V_k columns folded to the (r_j)_{j != k} block and
// expanded through the remaining factors, which realizes the Kronecker
// chain without materializing it.
Matrix build_w(const TuckerTensor& base, Index k, const Matrix& v_k) {
  const Shape rest_ranks = base.core().shape().without_mode(k);
  const Shape outer = base.outer_shape();
  Matrix w(outer.codim(k), v_k.cols());
  for (Index c = 0; c < v_k.cols(); ++c) {
    DenseTensor t(rest_ranks, v_k.col(c));
    Index pos = 0;
    for (Index j = 0; j < base.order(); ++j) {
      if (j == k) continue;
      t = mode_product(t, pos, base.factor(j));
      ++pos;
    }
    w.col(c) = t.vec();
  }
  return w;
}

}  // namespace

TangentBasis::TangentBasis(TuckerTensor base)
    : base_(std::move(base)), base_dense_(dense(base_)) {
  const Index d = base_.order();
  u_perp_.reserve(static_cast<std::size_t>(d));
  v_.reserve(static_cast<std::size_t>(d));
  w_.reserve(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) {
    const Matrix core_k = matricize(base_.core(), k);
    const Vector sv = singular_values(core_k);
    const Index r_k = base_.core().shape().dim(k);
    if (sv.size() < r_k || sv[0] <= 0.0 || sv[r_k - 1] <= kCoreRankTol * sv[0]) {
      throw rank_deficiency_error(
          "tangent_basis: core unfolding at mode " + std::to_string(k + 1) +
          " is rank deficient (the iterate left the manifold)");
    }
    u_perp_.push_back(orthonormal_complement(base_.factor(k)));
    v_.push_back(qr_q(core_k.transpose()));
    w_.push_back(build_w(base_, k, v_.back()));
  }
}

Index TangentBasis::tangent_dim() const {
  Index dim = base_.core().size();
  const Shape outer = base_.outer_shape();
  for (Index k = 0; k < order(); ++k) {
    const Index r_k = base_.core().shape().dim(k);
    dim += r_k * (outer.dim(k) - r_k);
  }
  return dim;
}

TangentVector TangentVector::zero(const TangentBasis& basis) {
  TangentVector v;
  v.b = DenseTensor(basis.base().core().shape());
  v.d.reserve(static_cast<std::size_t>(basis.order()));
  for (Index k = 0; k < basis.order(); ++k) {
    const Index p_k = basis.shape().dim(k);
    const Index r_k = basis.rank().at(k);
    v.d.push_back(Matrix::Zero(p_k - r_k, r_k));
  }
  v.basis = &basis;
  return v;
}

Index TangentVector::coordinate_dim() const {
  Index dim = b.size();
  for (const Matrix& m : d) dim += m.size();
  return dim;
}

Vector TangentVector::pack() const {
  Vector coords(coordinate_dim());
  coords.head(b.size()) = b.vec();
  Index off = b.size();
  for (const Matrix& m : d) {
    coords.segment(off, m.size()) = Eigen::Map<const Vector>(m.data(), m.size());
    off += m.size();
  }
  return coords;
}

TangentVector TangentVector::unpack(const TangentBasis& basis, const Vector& coords) {
  TangentVector v = zero(basis);
  if (coords.size() != v.coordinate_dim()) {
    throw std::invalid_argument("TangentVector: coordinate length mismatch");
  }
  v.b.vec() = coords.head(v.b.size());
  Index off = v.b.size();
  for (Matrix& m : v.d) {
    m = Eigen::Map<const Matrix>(coords.data() + off, m.rows(), m.cols());
    off += m.size();
  }
  return v;
}

TangentVector& TangentVector::operator+=(const TangentVector& other) {
  if (basis != other.basis) {
    throw std::invalid_argument("tangent vectors live in different bases");
  }
  b.vec() += other.b.vec();
  for (std::size_t k = 0; k < d.size(); ++k) d[k] += other.d[k];
  return *this;
}

TangentVector& TangentVector::operator*=(double s) {
  b.vec() *= s;
  for (Matrix& m : d) m *= s;
  return *this;
}

double coordinate_norm(const TangentVector& v) {
  double sq = v.b.vec().squaredNorm();
  for (const Matrix& m : v.d) sq += m.squaredNorm();
  return std::sqrt(sq);
}

double coordinate_dot(const TangentVector& a, const TangentVector& b) {
  if (a.basis != b.basis) {
    throw std::invalid_argument("tangent vectors live in different bases");
  }
  double s = a.b.vec().dot(b.b.vec());
  for (std::size_t k = 0; k < a.d.size(); ++k) {
    s += (a.d[k].array() * b.d[k].array()).sum();
  }
  return s;
}

TangentBasis tangent_basis(TuckerTensor x) { return TangentBasis(std::move(x)); }

DenseTensor extend(const TangentVector& v) {
  if (v.basis == nullptr) throw std::invalid_argument("extend: unbound tangent vector");
  const TangentBasis& basis = *v.basis;
  const Shape outer = basis.shape();
  DenseTensor out = multi_mode_product_all(v.b, basis.base().factors());
  for (Index k = 0; k < basis.order(); ++k) {
    const Matrix& d_k = v.d[static_cast<std::size_t>(k)];
    if (d_k.size() == 0) continue;
    const Matrix unfolded = (basis.u_perp(k) * d_k) * basis.w(k).transpose();
    out.vec() += tensorize(unfolded, k, outer).vec();
  }
  return out;
}

TangentVector contract(const TangentBasis& basis, const DenseTensor& z) {
  if (z.shape() != basis.shape()) {
    throw std::invalid_argument("contract: shape mismatch");
  }
  TangentVector v;
  v.basis = &basis;
  v.b = multi_mode_product_all_transposed(z, basis.base().factors());
  v.d.reserve(static_cast<std::size_t>(basis.order()));
  for (Index k = 0; k < basis.order(); ++k) {
    v.d.push_back(basis.u_perp(k).transpose() * matricize(z, k) * basis.w(k));
  }
  return v;
}

DenseTensor project_tangent(const TangentBasis& basis, const DenseTensor& z) {
  if (z.shape() != basis.shape()) {
    throw std::invalid_argument("project_tangent: shape mismatch");
  }
  // z x_k P_{U_k} evaluated as compress-then-expand.
  DenseTensor out = multi_mode_product_all(
      multi_mode_product_all_transposed(z, basis.base().factors()),
      basis.base().factors());
  for (Index k = 0; k < basis.order(); ++k) {
    const Matrix& u_perp = basis.u_perp(k);
    const Matrix& w = basis.w(k);
    if (u_perp.cols() == 0) continue;
    const Matrix mid = u_perp.transpose() * matricize(z, k) * w;
    out.vec() += tensorize((u_perp * mid) * w.transpose(), k, basis.shape()).vec();
  }
  return out;
}

TangentVector riemannian_gradient(const TangentBasis& basis,
                                  const MeasurementEnsemble& ensemble,
                                  const Vector& y, const DenseTensor& x_dense) {
  const Vector residual = apply(ensemble, x_dense) - y;
  return contract(basis, adjoint(ensemble, residual));
}

namespace {

TuckerTensor retract_dense(const TangentBasis& basis, const TangentVector& v,
                           const TuckerRank& r, RetractionMethod method) {
  const DenseTensor candidate = extend(v);
  for (Index k = 0; k < basis.order(); ++k) {
    const Vector sv = singular_values(matricize(candidate, k));
    if (sv[0] <= 0.0 || sv[r.at(k) - 1] <= kCoreRankTol * sv[0]) {
      throw rank_deficiency_error("retract: candidate has mode-" +
                                  std::to_string(k + 1) + " rank below target");
    }
  }
  return method == RetractionMethod::st_hosvd ? st_hosvd(candidate, r)
                                              : t_hosvd(candidate, r);
}

TuckerTensor retract_fast(const TangentBasis& basis, const TangentVector& v,
                          const TuckerRank& r, RetractionMethod method) {
  const Index d = basis.order();
  const TuckerRank base_rank = basis.rank();

  // Combined frames Q_k = [U_k, orth(U_k_perp D_k)] of width <= min(2 r_k, p_k).
  std::vector<Matrix> frames;        // Q_k
  std::vector<Matrix> d_in_frame;    // Q_k^T U_k_perp D_k
  std::vector<Index> widths;
  frames.reserve(static_cast<std::size_t>(d));
  d_in_frame.reserve(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) {
    const Matrix& d_k = v.d[static_cast<std::size_t>(k)];
    const Index r_k = base_rank.at(k);
    Matrix extra;   // orthonormal directions of U_k_perp D_k
    Matrix d_top;   // coefficients of D_k in those directions
    if (d_k.size() > 0) {
      Eigen::BDCSVD<Matrix> svd(d_k, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const Vector& sv = svd.singularValues();
      Index m = 0;
      while (m < sv.size() && sv[m] > 1e-14 * sv[0] && sv[0] > 0.0) ++m;
      if (m > 0) {
        extra = basis.u_perp(k) * svd.matrixU().leftCols(m);
        d_top = svd.matrixU().leftCols(m).transpose() * d_k;
      }
    }
    const Index m = extra.cols();
    Matrix q(basis.shape().dim(k), r_k + m);
    q.leftCols(r_k) = basis.u(k);
    if (m > 0) q.rightCols(m) = extra;
    Matrix a = Matrix::Zero(r_k + m, r_k);
    if (m > 0) a.bottomRows(m) = d_top;
    frames.push_back(std::move(q));
    d_in_frame.push_back(std::move(a));
    widths.push_back(r_k + m);
  }

  const Shape small_shape{std::vector<Index>(widths.begin(), widths.end())};

  // Small core: embed B, then add each fold_k(A_k K_k^T) where K_k embeds
  // the V_k columns into the enlarged frame coordinates.
  DenseTensor small_core(small_shape);
  {
    // B sits in the leading r_1 x ... x r_d corner.
    std::vector<Matrix> embed;
    embed.reserve(static_cast<std::size_t>(d));
    for (Index k = 0; k < d; ++k) {
      Matrix e = Matrix::Zero(widths[static_cast<std::size_t>(k)], base_rank.at(k));
      e.topRows(base_rank.at(k)).setIdentity();
      embed.push_back(std::move(e));
    }
    small_core = multi_mode_product_all(v.b, embed);
  }
  for (Index k = 0; k < d; ++k) {
    const Matrix& a_k = d_in_frame[static_cast<std::size_t>(k)];
    if (a_k.cwiseAbs().maxCoeff() == 0.0) continue;
    const Shape rest_ranks = basis.base().core().shape().without_mode(k);
    const Shape rest_small = small_shape.without_mode(k);
    Matrix k_mat(rest_small.total(), base_rank.at(k));
    for (Index c = 0; c < base_rank.at(k); ++c) {
      DenseTensor t(rest_ranks, basis.v(k).col(c));
      Index pos = 0;
      for (Index j = 0; j < d; ++j) {
        if (j == k) continue;
        Matrix e = Matrix::Zero(widths[static_cast<std::size_t>(j)], base_rank.at(j));
        e.topRows(base_rank.at(j)).setIdentity();
        t = mode_product(t, pos, e);
        ++pos;
      }
      k_mat.col(c) = t.vec();
    }
    small_core.vec() +=
        tensorize(a_k * k_mat.transpose(), k, small_shape).vec();
  }

  for (Index k = 0; k < d; ++k) {
    const Vector sv = singular_values(matricize(small_core, k));
    if (sv[0] <= 0.0 || sv[r.at(k) - 1] <= kCoreRankTol * sv[0]) {
      throw rank_deficiency_error("retract: candidate has mode-" +
                                  std::to_string(k + 1) + " rank below target");
    }
  }

  const TuckerTensor truncated = method == RetractionMethod::st_hosvd
                                     ? st_hosvd(small_core, r)
                                     : t_hosvd(small_core, r);
  std::vector<Matrix> factors;
  factors.reserve(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) {
    factors.push_back(frames[static_cast<std::size_t>(k)] * truncated.factor(k));
  }
  return TuckerTensor(truncated.core(), std::move(factors));
}

}  // namespace

TuckerTensor retract(const TangentBasis& basis, const TangentVector& v,
                     const TuckerRank& r, RetractionMethod method,
                     RetractionPath path) {
  check_same_basis(v, basis);
  r.validate_for(basis.shape());
  if (path == RetractionPath::dense) return retract_dense(basis, v, r, method);
  return retract_fast(basis, v, r, method);
}

double gauss_newton_residual(const TangentBasis& basis,
                             const MeasurementEnsemble& ensemble,
                             const Vector& y, const DenseTensor& x_half) {
  const Vector residual = apply(ensemble, x_half) - y;
  return hs_norm(project_tangent(basis, adjoint(ensemble, residual)));
}

}  // namespace rgn
