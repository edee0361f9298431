#pragma once

#include <span>

#include "rgn/types.hpp"

namespace rgn {

/// Flips the sign of each column so its largest-magnitude entry is
/// positive (ties resolved to the lowest row index). Applied to every
/// orthonormal basis this library produces so reruns are bit-stable.
void make_columns_sign_deterministic(Matrix& u);

/// Leading r left singular vectors of m, orthonormal, with deterministic
/// column signs.
Matrix svd_leading(const Matrix& m, Index r);

/// All singular values of m, descending.
Vector singular_values(const Matrix& m);

/// Thin Q factor of m (rows >= cols) normalized so R has a positive
/// diagonal. Throws rank_deficiency_error when any |R_ii| < 1e-12 * ||m||_F.
Matrix qr_q(const Matrix& m);

/// Deterministic orthonormal complement of a p x r orthonormal basis:
/// QR of [u | G] with G drawn from a fixed-seed Gaussian stream, then
/// sign-normalized.
Matrix orthonormal_complement(const Matrix& u);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker chain over the given matrices such that column/row multi-
/// indices enumerate colexicographically in the order supplied, i.e.
/// result = mats[d-1] (x) ... (x) mats[0].
Matrix colex_kron(std::span<const Matrix> mats);
Vector colex_kron_vec(std::span<const Vector> vs);

}  // namespace rgn
