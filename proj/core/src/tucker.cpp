#include "rgn/tucker.hpp"

#include <algorithm>

#include "rgn/linalg.hpp"

namespace rgn {

TuckerRank::TuckerRank(std::vector<Index> r) : r_(std::move(r)) {
  for (Index v : r_) {
    if (v < 0) throw std::invalid_argument("TuckerRank: negative rank");
  }
}

TuckerRank TuckerRank::cubic(Index order, Index r) {
  return TuckerRank(std::vector<Index>(static_cast<std::size_t>(order), r));
}

Index TuckerRank::core_size() const {
  Index s = 1;
  for (Index v : r_) s *= v;
  return s;
}

TuckerRank TuckerRank::scaled(Index factor) const {
  std::vector<Index> out = r_;
  for (Index& v : out) v *= factor;
  return TuckerRank(std::move(out));
}

TuckerRank TuckerRank::capped(const Shape& shape) const {
  if (shape.order() != order()) {
    throw std::invalid_argument("TuckerRank: order mismatch");
  }
  std::vector<Index> out = r_;
  for (Index k = 0; k < order(); ++k) {
    out[static_cast<std::size_t>(k)] =
        std::min(out[static_cast<std::size_t>(k)], shape.dim(k));
  }
  return TuckerRank(std::move(out));
}

void TuckerRank::validate_for(const Shape& shape) const {
  if (shape.order() != order()) {
    throw std::invalid_argument("TuckerRank: order mismatch");
  }
  for (Index k = 0; k < order(); ++k) {
    if (at(k) < 1 || at(k) > shape.dim(k)) {
      throw std::invalid_argument("TuckerRank: rank exceeds dimension at mode " +
                                  std::to_string(k + 1));
    }
  }
}

namespace {
constexpr double kOrthTol = 1e-10;
}

TuckerTensor::TuckerTensor(DenseTensor core, std::vector<Matrix> factors)
    : core_(std::move(core)), factors_(std::move(factors)) {
  if (static_cast<Index>(factors_.size()) != core_.order()) {
    throw std::invalid_argument("TuckerTensor: one factor per core mode expected");
  }
  for (Index k = 0; k < core_.order(); ++k) {
    const Matrix& u = factors_[static_cast<std::size_t>(k)];
    if (u.cols() != core_.shape().dim(k)) {
      throw std::invalid_argument("TuckerTensor: factor/core dimension mismatch");
    }
    if (u.rows() < u.cols()) {
      throw std::invalid_argument("TuckerTensor: factor has more columns than rows");
    }
    const Matrix gram = u.transpose() * u;
    const double err =
        (gram - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
    if (err > kOrthTol) {
      throw std::invalid_argument("TuckerTensor: factor columns not orthonormal");
    }
  }
}

Shape TuckerTensor::outer_shape() const {
  std::vector<Index> dims;
  dims.reserve(factors_.size());
  for (const Matrix& u : factors_) dims.push_back(u.rows());
  return Shape(std::move(dims));
}

TuckerRank TuckerTensor::rank() const {
  return TuckerRank(core_.shape().dims());
}

DenseTensor dense(const TuckerTensor& x) {
  return multi_mode_product_all(x.core(), x.factors());
}

TuckerTensor t_hosvd(const DenseTensor& t, const TuckerRank& r) {
  r.validate_for(t.shape());
  std::vector<Matrix> factors;
  factors.reserve(static_cast<std::size_t>(t.order()));
  for (Index k = 0; k < t.order(); ++k) {
    factors.push_back(svd_leading(matricize(t, k), r.at(k)));
  }
  DenseTensor core = multi_mode_product_all_transposed(t, factors);
  return TuckerTensor(std::move(core), std::move(factors));
}

TuckerTensor st_hosvd(const DenseTensor& t, const TuckerRank& r) {
  r.validate_for(t.shape());
  // Modes are truncated in fixed order 1..d; the running core is kept
  // compressed, which leaves the computed subspaces unchanged relative to
  // projecting the full tensor.
  DenseTensor core = t;
  std::vector<Matrix> factors;
  factors.reserve(static_cast<std::size_t>(t.order()));
  for (Index k = 0; k < t.order(); ++k) {
    Matrix u = svd_leading(matricize(core, k), r.at(k));
    core = mode_product(core, k, u.transpose());
    factors.push_back(std::move(u));
  }
  return TuckerTensor(std::move(core), std::move(factors));
}

TuckerRank tucker_rank(const DenseTensor& t, double tol) {
  if (tol < 0) throw std::invalid_argument("tucker_rank: tol must be >= 0");
  std::vector<Index> r;
  r.reserve(static_cast<std::size_t>(t.order()));
  for (Index k = 0; k < t.order(); ++k) {
    const Vector sv = singular_values(matricize(t, k));
    Index count = 0;
    if (sv.size() > 0 && sv[0] > 0.0) {
      const double floor = tol * sv[0];
      for (Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > floor) ++count;
      }
    }
    r.push_back(count);
  }
  return TuckerRank(std::move(r));
}

}  // namespace rgn
