#pragma once

#include <vector>

#include "rgn/dense_tensor.hpp"
#include "rgn/tensor_ops.hpp"
#include "rgn/types.hpp"

namespace rgn {

/// Per-mode ranks r_1..r_d.
class TuckerRank {
 public:
  TuckerRank() = default;
  explicit TuckerRank(std::vector<Index> r);
  TuckerRank(std::initializer_list<Index> r)
      : TuckerRank(std::vector<Index>(r)) {}

  /// Cubic rank (r, r, ..., r) of the given order.
  static TuckerRank cubic(Index order, Index r);

  Index order() const { return static_cast<Index>(r_.size()); }
  Index at(Index k) const { return r_.at(static_cast<std::size_t>(k)); }
  const std::vector<Index>& values() const { return r_; }

  Index core_size() const;  // prod r_k

  /// Element-wise multiple (2r, 3r, ...).
  TuckerRank scaled(Index factor) const;
  /// Element-wise min with the dims of a shape.
  TuckerRank capped(const Shape& shape) const;

  /// Throws unless 1 <= r_k <= p_k for every mode.
  void validate_for(const Shape& shape) const;

  bool operator==(const TuckerRank& o) const { return r_ == o.r_; }

 private:
  std::vector<Index> r_;
};

/// Tucker-format tensor: core of shape r_1 x ... x r_d plus one p_k x r_k
/// factor with orthonormal columns per mode. Orthonormality is checked to
/// 1e-10 at construction.
class TuckerTensor {
 public:
  TuckerTensor() = default;
  TuckerTensor(DenseTensor core, std::vector<Matrix> factors);

  const DenseTensor& core() const { return core_; }
  const std::vector<Matrix>& factors() const { return factors_; }
  const Matrix& factor(Index k) const {
    return factors_.at(static_cast<std::size_t>(k));
  }

  Index order() const { return core_.order(); }
  Shape outer_shape() const;
  TuckerRank rank() const;

 private:
  DenseTensor core_;
  std::vector<Matrix> factors_;
};

/// Full composition core x_1 U_1 ... x_d U_d.
DenseTensor dense(const TuckerTensor& x);

/// Rank-r truncation with per-mode leading singular subspaces computed
/// independently from the unfoldings of t.
TuckerTensor t_hosvd(const DenseTensor& t, const TuckerRank& r);

/// Sequentially truncated variant: modes are compressed in order 1..d and
/// each later subspace is computed from the already-truncated tensor.
TuckerTensor st_hosvd(const DenseTensor& t, const TuckerRank& r);

/// Number of singular values of each unfolding exceeding tol * sigma_1.
TuckerRank tucker_rank(const DenseTensor& t, double tol = 1e-10);

}  // namespace rgn
