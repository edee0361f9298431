#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rgn {

using Index = std::int64_t;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown when an iterate or candidate loses the rank structure the
/// manifold operations rely on (e.g. a core tensor with a numerically
/// deficient mode unfolding).
class rank_deficiency_error : public std::runtime_error {
 public:
  explicit rank_deficiency_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rgn
