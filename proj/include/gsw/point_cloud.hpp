#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace gsw {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using ConstVectorRef = Eigen::Ref<const Eigen::VectorXd>;

// N equally weighted samples in R^d, one per row. Represents the empirical
// measure (1/N) sum_i delta(x - x_i).
class PointCloud {
 public:
  // Throws std::invalid_argument when empty or when an entry is not finite.
  explicit PointCloud(Matrix points);

  std::size_t size() const { return static_cast<std::size_t>(points_.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(points_.cols()); }

  auto point(std::size_t i) const { return points_.row(static_cast<Eigen::Index>(i)).transpose(); }
  const Matrix& matrix() const { return points_; }

  friend bool operator==(const PointCloud& a, const PointCloud& b) {
    return a.points_.rows() == b.points_.rows() && a.points_.cols() == b.points_.cols() &&
           a.points_ == b.points_;
  }

 private:
  Matrix points_;
};

// Throws std::invalid_argument unless both clouds have the same N and d.
void require_same_shape(const PointCloud& x, const PointCloud& y);

}  // namespace gsw
