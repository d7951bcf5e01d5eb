#include "gsw/one_d_ot.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gsw {

void require_valid_order(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("order p must be finite and >= 1");
}

std::vector<std::size_t> sort_permutation(std::span<const double> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  return idx;
}

double sorted_power_cost(std::span<const double> a_sorted, std::span<const double> b_sorted, double p) {
  double sum = 0.0;
  for (std::size_t n = 0; n < a_sorted.size(); ++n) sum += power_abs(a_sorted[n] - b_sorted[n], p);
  return sum / static_cast<double>(a_sorted.size());
}

double wasserstein_1d(std::span<const double> x, std::span<const double> y, double p) {
  require_valid_order(p);
  if (x.size() != y.size()) throw std::invalid_argument("wasserstein_1d needs equal sample counts");
  if (x.empty()) throw std::invalid_argument("wasserstein_1d needs at least one sample");
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  return root_p(sorted_power_cost(xs, ys, p), p);
}

}  // namespace gsw
