#include "gsw/exact_oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "gsw/one_d_ot.hpp"

namespace gsw {

std::vector<std::size_t> solve_assignment(const Matrix& cost) {
  const auto n = static_cast<std::size_t>(cost.rows());
  if (cost.cols() != cost.rows()) throw std::invalid_argument("assignment cost matrix must be square");
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // 1-based arrays; column 0 is the virtual start of each augmenting path.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), min_slack(n + 1);
  std::vector<std::size_t> row_of(n + 1, 0), prev(n + 1, 0);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t col = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col] = 1;
      const std::size_t row = row_of[col];
      double delta = kInf;
      std::size_t next = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double slack = cost(row - 1, j - 1) - u[row] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          prev[j] = col;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next;
    } while (row_of[col] != 0);
    do {
      const std::size_t back = prev[col];
      row_of[col] = row_of[back];
      col = back;
    } while (col != 0);
  }

  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[row_of[j] - 1] = j - 1;
  return assignment;
}

AssignmentResult exact_wp(const PointCloud& x, const PointCloud& y, double p, const OracleOptions& options) {
  require_valid_order(p);
  require_same_shape(x, y);
  const std::size_t n = x.size();
  if (n > options.max_points) {
    throw std::invalid_argument("exact_wp: N = " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(options.max_points));
  }
  Matrix cost(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double sq = (x.point(i) - y.point(j)).squaredNorm();
      cost(i, j) = p == 2.0 ? sq : power_abs(std::sqrt(sq), p);
    }
  }
  AssignmentResult result;
  result.permutation = solve_assignment(cost);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += cost(i, result.permutation[i]);
  result.cost = root_p(total / static_cast<double>(n), p);
  return result;
}

}  // namespace gsw
