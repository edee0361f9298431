#include "rgn/tensor_ops.hpp"

namespace rgn {

namespace {

void check_mode(const DenseTensor& t, Index mode) {
  if (mode < 0 || mode >= t.order()) {
    throw std::invalid_argument("tensor op: mode out of range");
  }
}

// Every mode-k operation views the flat data as a (left, p_k, right) block
// structure: left = stride of mode k, right = trailing slab count.
struct ModeView {
  Index left;
  Index mid;
  Index right;
};

ModeView mode_view(const Shape& shape, Index k) {
  const Index left = shape.stride(k);
  const Index mid = shape.dim(k);
  return {left, mid, shape.total() / (left * mid)};
}

}  // namespace

Matrix matricize(const DenseTensor& t, Index mode) {
  check_mode(t, mode);
  const auto [left, mid, right] = mode_view(t.shape(), mode);
  Matrix m(mid, left * right);
  const double* data = t.vec().data();
  for (Index r = 0; r < right; ++r) {
    Eigen::Map<const Matrix> slab(data + r * left * mid, left, mid);
    m.middleCols(r * left, left) = slab.transpose();
  }
  return m;
}

DenseTensor tensorize(const Matrix& m, Index mode, const Shape& shape) {
  if (mode < 0 || mode >= shape.order()) {
    throw std::invalid_argument("tensorize: mode out of range");
  }
  const auto [left, mid, right] = mode_view(shape, mode);
  if (m.rows() != mid || m.cols() != left * right) {
    throw std::invalid_argument("tensorize: matrix dimensions do not match shape");
  }
  DenseTensor t(shape);
  double* data = t.vec().data();
  for (Index r = 0; r < right; ++r) {
    Eigen::Map<Matrix> slab(data + r * left * mid, left, mid);
    slab = m.middleCols(r * left, left).transpose();
  }
  return t;
}

DenseTensor mode_product(const DenseTensor& t, Index mode, const Matrix& b) {
  check_mode(t, mode);
  const auto [left, mid, right] = mode_view(t.shape(), mode);
  if (b.cols() != mid) {
    throw std::invalid_argument("mode_product: matrix columns do not match mode dim");
  }
  const Index q = b.rows();
  DenseTensor out(t.shape().with_dim(mode, q));
  const double* src = t.vec().data();
  double* dst = out.vec().data();
  if (left == 1) {
    Eigen::Map<const Matrix> in(src, mid, right);
    Eigen::Map<Matrix> res(dst, q, right);
    res.noalias() = b * in;
  } else {
    for (Index r = 0; r < right; ++r) {
      Eigen::Map<const Matrix> in(src + r * left * mid, left, mid);
      Eigen::Map<Matrix> res(dst + r * left * q, left, q);
      res.noalias() = in * b.transpose();
    }
  }
  return out;
}

DenseTensor multi_mode_product(const DenseTensor& t,
                               const std::vector<std::optional<Matrix>>& mats) {
  if (static_cast<Index>(mats.size()) != t.order()) {
    throw std::invalid_argument("multi_mode_product: one (optional) matrix per mode expected");
  }
  DenseTensor out = t;
  for (Index k = 0; k < t.order(); ++k) {
    const auto& m = mats[static_cast<std::size_t>(k)];
    if (m.has_value()) out = mode_product(out, k, *m);
  }
  return out;
}

DenseTensor multi_mode_product_all(const DenseTensor& t,
                                   std::span<const Matrix> mats) {
  if (static_cast<Index>(mats.size()) != t.order()) {
    throw std::invalid_argument("multi_mode_product_all: one matrix per mode expected");
  }
  DenseTensor out = t;
  for (Index k = 0; k < t.order(); ++k) {
    out = mode_product(out, k, mats[static_cast<std::size_t>(k)]);
  }
  return out;
}

DenseTensor multi_mode_product_all_transposed(const DenseTensor& t,
                                              std::span<const Matrix> mats) {
  if (static_cast<Index>(mats.size()) != t.order()) {
    throw std::invalid_argument("multi_mode_product_all_transposed: one matrix per mode expected");
  }
  DenseTensor out = t;
  for (Index k = 0; k < t.order(); ++k) {
    out = mode_product(out, k, mats[static_cast<std::size_t>(k)].transpose());
  }
  return out;
}

double inner(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) {
    throw std::invalid_argument("inner: shape mismatch");
  }
  return a.vec().dot(b.vec());
}

double hs_norm(const DenseTensor& a) { return a.vec().norm(); }

}  // namespace rgn
