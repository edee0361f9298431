#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rgn/dense_tensor.hpp"
#include "rgn/types.hpp"

namespace rgn {

/// Mode-k unfolding: entry (i_k, j) of the result equals t(i_1,...,i_d)
/// with j enumerating the remaining modes colexicographically. Pure data
/// movement, no floating-point arithmetic.
Matrix matricize(const DenseTensor& t, Index mode);

/// Inverse of matricize: folds a p_k x prod_{j != k} p_j matrix back into
/// a tensor of the given shape.
DenseTensor tensorize(const Matrix& m, Index mode, const Shape& shape);

/// Mode-k product t x_k b for b with b.cols() == p_k; the result replaces
/// p_k by b.rows() and satisfies matricize(result, k) = b * matricize(t, k).
DenseTensor mode_product(const DenseTensor& t, Index mode, const Matrix& b);

/// Applies the supplied per-mode matrices in ascending mode order; modes
/// with an empty optional are left untouched.
DenseTensor multi_mode_product(const DenseTensor& t,
                               const std::vector<std::optional<Matrix>>& mats);

/// Applies one matrix per mode, in ascending mode order.
DenseTensor multi_mode_product_all(const DenseTensor& t,
                                   std::span<const Matrix> mats);

/// Same as above with every matrix transposed (the common compress step
/// t x_k U_k^T for orthonormal factors U_k).
DenseTensor multi_mode_product_all_transposed(const DenseTensor& t,
                                              std::span<const Matrix> mats);

double inner(const DenseTensor& a, const DenseTensor& b);
double hs_norm(const DenseTensor& a);

}  // namespace rgn
