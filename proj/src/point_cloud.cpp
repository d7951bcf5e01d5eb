#include "gsw/point_cloud.hpp"

#include <stdexcept>
#include <string>

namespace gsw {

PointCloud::PointCloud(Matrix points) : points_(std::move(points)) {
  if (points_.rows() < 1 || points_.cols() < 1) {
    throw std::invalid_argument("point cloud needs at least one point of dimension >= 1");
  }
  if (!points_.allFinite()) {
    throw std::invalid_argument("point cloud contains non-finite entries");
  }
}

void require_same_shape(const PointCloud& x, const PointCloud& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("sample count mismatch: " + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  }
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()));
  }
}

}  // namespace gsw
