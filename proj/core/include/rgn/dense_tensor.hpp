#pragma once

#include <span>
#include <utility>

#include "rgn/shape.hpp"
#include "rgn/types.hpp"

namespace rgn {

/// Dense order-d tensor of doubles. Entry (i_1,...,i_d) (0-based) lives at
/// flat position sum_l i_l * prod_{m<l} p_m, so the mode-1 unfolding is a
/// plain column-major reshape of the flat data.
class DenseTensor {
 public:
  DenseTensor() = default;
  explicit DenseTensor(Shape shape)
      : shape_(std::move(shape)), data_(Vector::Zero(shape_.total())) {}
  DenseTensor(Shape shape, Vector data);

  const Shape& shape() const { return shape_; }
  Index order() const { return shape_.order(); }
  Index size() const { return shape_.total(); }

  double operator[](Index flat) const { return data_[flat]; }
  double& operator[](Index flat) { return data_[flat]; }

  double at(std::span<const Index> idx) const {
    return data_[shape_.linear_index(idx)];
  }
  double& at(std::span<const Index> idx) {
    return data_[shape_.linear_index(idx)];
  }
  template <typename... Is>
  double at(Is... is) const {
    const Index idx[] = {static_cast<Index>(is)...};
    return at(std::span<const Index>(idx, sizeof...(Is)));
  }
  template <typename... Is>
  double& at(Is... is) {
    const Index idx[] = {static_cast<Index>(is)...};
    return at(std::span<const Index>(idx, sizeof...(Is)));
  }

  const Vector& vec() const { return data_; }
  Vector& vec() { return data_; }

  bool operator==(const DenseTensor& other) const {
    return shape_ == other.shape_ && data_ == other.data_;
  }

 private:
  Shape shape_;
  Vector data_;
};

}  // namespace rgn
