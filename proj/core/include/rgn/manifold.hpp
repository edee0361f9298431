#pragma once

#include <vector>

#include "rgn/tucker.hpp"
#include "rgn/types.hpp"

namespace rgn {

class MeasurementEnsemble;

/// Frames attached to a point of the fixed-Tucker-rank manifold: per mode,
/// the factor U_k, an orthonormal complement U_k_perp, the orthonormalized
/// core row space V_k, and the ambient row-space basis
/// W_k = (U_d (x) ... (x) U_{k+1} (x) U_{k-1} (x) ... (x) U_1) V_k.
class TangentBasis {
 public:
  explicit TangentBasis(TuckerTensor base);

  const TuckerTensor& base() const { return base_; }
  const DenseTensor& base_dense() const { return base_dense_; }
  Shape shape() const { return base_.outer_shape(); }
  TuckerRank rank() const { return base_.rank(); }
  Index order() const { return base_.order(); }

  const Matrix& u(Index k) const { return base_.factor(k); }
  const Matrix& u_perp(Index k) const { return u_perp_.at(static_cast<std::size_t>(k)); }
  const Matrix& v(Index k) const { return v_.at(static_cast<std::size_t>(k)); }
  const Matrix& w(Index k) const { return w_.at(static_cast<std::size_t>(k)); }

  /// prod r_j + sum r_j (p_j - r_j).
  Index tangent_dim() const;

 private:
  TuckerTensor base_;
  DenseTensor base_dense_;
  std::vector<Matrix> u_perp_;
  std::vector<Matrix> v_;
  std::vector<Matrix> w_;
};

/// Minimal tangent coordinates (B, {D_k}) relative to a TangentBasis.
/// Vectors from different bases must not be mixed; operations check this.
struct TangentVector {
  DenseTensor b;
  std::vector<Matrix> d;
  const TangentBasis* basis = nullptr;

  static TangentVector zero(const TangentBasis& basis);

  Index coordinate_dim() const;
  Vector pack() const;
  static TangentVector unpack(const TangentBasis& basis, const Vector& coords);

  TangentVector& operator+=(const TangentVector& other);
  TangentVector& operator*=(double s);
  friend TangentVector operator+(TangentVector a, const TangentVector& b) {
    a += b;
    return a;
  }
  friend TangentVector operator*(TangentVector a, double s) {
    a *= s;
    return a;
  }
};

double coordinate_norm(const TangentVector& v);
double coordinate_dot(const TangentVector& a, const TangentVector& b);

TangentBasis tangent_basis(TuckerTensor x);

/// Extension map: B x_k U_k + sum_k fold_k(U_k_perp D_k W_k^T).
DenseTensor extend(const TangentVector& v);

/// Contraction map (adjoint of extend): B = z x_k U_k^T,
/// D_k = U_k_perp^T unfold_k(z) W_k.
TangentVector contract(const TangentBasis& basis, const DenseTensor& z);

/// Orthogonal projection of z onto the tangent space at the basis point.
DenseTensor project_tangent(const TangentBasis& basis, const DenseTensor& z);

/// Tangent coordinates of the least-squares gradient A*(A(x) - y).
TangentVector riemannian_gradient(const TangentBasis& basis,
                                  const MeasurementEnsemble& ensemble,
                                  const Vector& y, const DenseTensor& x_dense);

enum class RetractionMethod { st_hosvd, t_hosvd };
enum class RetractionPath { fast, dense };

/// Maps the tangent-space point with coordinates v back onto the manifold
/// by rank-r truncation of extend(v). The fast path expresses the
/// candidate in combined frames of width at most 2 r_k per mode and runs the
/// truncation on the small core; the dense path materializes extend(v).
/// Throws rank_deficiency_error when the candidate has a mode rank < r_k.
TuckerTensor retract(const TangentBasis& basis, const TangentVector& v,
                     const TuckerRank& r,
                     RetractionMethod method = RetractionMethod::st_hosvd,
                     RetractionPath path = RetractionPath::fast);

/// Norm of the tangent projection of the residual gradient at x_half;
/// vanishes at the solution of the tangent-space least squares.
double gauss_newton_residual(const TangentBasis& basis,
                             const MeasurementEnsemble& ensemble,
                             const Vector& y, const DenseTensor& x_half);

}  // namespace rgn
