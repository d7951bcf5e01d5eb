#pragma once

#include <cstddef>
#include <vector>

#include "gsw/point_cloud.hpp"

namespace gsw {

struct AssignmentResult {
  // permutation[i] is the target index matched to source point i.
  std::vector<std::size_t> permutation;
  // (1/N sum_i ||x_i - y_perm[i]||^p)^(1/p), minimal over all bijections.
  double cost = 0.0;
};

struct OracleOptions {
  std::size_t max_points = 2048;
};

// Minimum-cost perfect matching for a square cost matrix (shortest
// augmenting path Hungarian method with potentials, O(N^3)). Returns the
// row-to-column assignment.
std::vector<std::size_t> solve_assignment(const Matrix& cost);

// Exact empirical W_p between equal-size clouds with Euclidean ground cost.
// Throws std::invalid_argument on shape mismatch, p < 1, or N above the cap.
AssignmentResult exact_wp(const PointCloud& x, const PointCloud& y, double p, const OracleOptions& options = {});

}  // namespace gsw
