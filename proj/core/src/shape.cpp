#include "rgn/shape.hpp"

#include <limits>
#include <sstream>

namespace rgn {

Shape::Shape(std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    total_ = 1;
    return;
  }
  total_ = 1;
  for (Index d : dims_) {
    if (d < 1) throw std::invalid_argument("Shape: dims must be >= 1");
    if (total_ > std::numeric_limits<Index>::max() / d) {
      throw std::invalid_argument("Shape: total size overflows index type");
    }
    total_ *= d;
  }
}

Index Shape::stride(Index k) const {
  if (k < 0 || k >= order()) throw std::invalid_argument("Shape: mode out of range");
  Index s = 1;
  for (Index m = 0; m < k; ++m) s *= dims_[static_cast<std::size_t>(m)];
  return s;
}

Index Shape::codim(Index k) const {
  if (k < 0 || k >= order()) throw std::invalid_argument("Shape: mode out of range");
  return total_ / dims_[static_cast<std::size_t>(k)];
}

Shape Shape::without_mode(Index k) const {
  if (k < 0 || k >= order()) throw std::invalid_argument("Shape: mode out of range");
  std::vector<Index> rest;
  rest.reserve(dims_.size() - 1);
  for (Index m = 0; m < order(); ++m) {
    if (m != k) rest.push_back(dims_[static_cast<std::size_t>(m)]);
  }
  return Shape(std::move(rest));
}

Shape Shape::with_dim(Index k, Index value) const {
  if (k < 0 || k >= order()) throw std::invalid_argument("Shape: mode out of range");
  std::vector<Index> dims = dims_;
  dims[static_cast<std::size_t>(k)] = value;
  return Shape(std::move(dims));
}

Index Shape::linear_index(std::span<const Index> idx) const {
  if (static_cast<Index>(idx.size()) != order()) {
    throw std::invalid_argument("Shape: index order mismatch");
  }
  Index flat = 0;
  Index stride = 1;
  for (Index l = 0; l < order(); ++l) {
    const Index i = idx[static_cast<std::size_t>(l)];
    const Index p = dims_[static_cast<std::size_t>(l)];
    if (i < 0 || i >= p) throw std::out_of_range("Shape: index out of range");
    flat += i * stride;
    stride *= p;
  }
  return flat;
}

std::string Shape::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << ", ";
    os << dims_[i];
  }
  os << ")";
  return os.str();
}

}  // namespace rgn
