#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rgn/types.hpp"

namespace rgn {

/// Dimensions p_1..p_d of an order-d tensor. All dims are >= 1 and the
/// total element count is checked against Index overflow at construction.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<Index> dims);
  Shape(std::initializer_list<Index> dims) : Shape(std::vector<Index>(dims)) {}

  Index order() const { return static_cast<Index>(dims_.size()); }
  Index dim(Index k) const { return dims_.at(static_cast<std::size_t>(k)); }
  const std::vector<Index>& dims() const { return dims_; }
  Index total() const { return total_; }

  // Product of dims before mode k (the mode-k stride of the
  // colexicographic linearization).
  Index stride(Index k) const;
  // Product of dims other than mode k.
  Index codim(Index k) const;

  // Shape with mode k removed (order d-1; scalar shapes are not produced,
  // removing the only mode of an order-1 shape yields the empty shape).
  Shape without_mode(Index k) const;
  // Shape with dim at mode k replaced.
  Shape with_dim(Index k, Index value) const;

  Index linear_index(std::span<const Index> idx) const;

  bool operator==(const Shape& other) const { return dims_ == other.dims_; }
  bool operator!=(const Shape& other) const { return !(*this == other); }

  std::string str() const;

 private:
  std::vector<Index> dims_;
  Index total_ = 0;
};

}  // namespace rgn
