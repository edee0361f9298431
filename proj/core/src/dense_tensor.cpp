#include "rgn/dense_tensor.hpp"

namespace rgn {

DenseTensor::DenseTensor(Shape shape, Vector data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != shape_.total()) {
    throw std::invalid_argument("DenseTensor: data length does not match shape");
  }
}

}  // namespace rgn
