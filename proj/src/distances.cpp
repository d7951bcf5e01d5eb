#include "gsw/distances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsw/one_d_ot.hpp"
#include "gsw/random.hpp"

namespace gsw {

namespace {

void check_inputs(const DefiningFunction& g, const PointCloud& x, const PointCloud& y, double p) {
  require_valid_order(p);
  require_same_shape(x, y);
  if (x.dim() != g.data_dim()) throw std::invalid_argument("cloud dimension does not match the defining function");
}

double sign_of(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

}  // namespace

double slice_power_cost(const DefiningFunction& g, const PointCloud& x, const PointCloud& y,
                        const ThetaParams& theta, double p) {
  std::vector<double> px, py;
  g.project(x, theta.vector(), px);
  g.project(y, theta.vector(), py);
  std::sort(px.begin(), px.end());
  std::sort(py.begin(), py.end());
  return sorted_power_cost(px, py, p);
}

double slice_power_cost_and_theta_gradient(const DefiningFunction& g, const PointCloud& x,
                                           const PointCloud& y, const Vector& theta, double p,
                                           Vector& grad) {
  std::vector<double> px, py;
  g.project(x, theta, px);
  g.project(y, theta, py);
  const auto ix = sort_permutation(px);
  const auto iy = sort_permutation(py);
  const double n = static_cast<double>(x.size());
  grad = Vector::Zero(theta.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < ix.size(); ++k) {
    const double diff = px[ix[k]] - py[iy[k]];
    sum += power_abs(diff, p);
    if (diff == 0.0) continue;
    const double w = p * power_abs(diff, p - 1.0) * sign_of(diff);
    grad += w * (g.grad_theta(theta, x.point(ix[k])) - g.grad_theta(theta, y.point(iy[k])));
  }
  grad /= n;
  return sum / n;
}

double gsw_with_slices(const DefiningFunction& g, const PointCloud& x, const PointCloud& y,
                       std::span<const ThetaParams> slices, double p) {
  check_inputs(g, x, y, p);
  if (slices.empty()) throw std::invalid_argument("gsw needs at least one slice");
  double total = 0.0;
  for (const auto& theta : slices) total += slice_power_cost(g, x, y, theta, p);
  return root_p(total / static_cast<double>(slices.size()), p);
}

double max_gsw_over_slices(const DefiningFunction& g, const PointCloud& x, const PointCloud& y,
                           std::span<const ThetaParams> slices, double p) {
  check_inputs(g, x, y, p);
  if (slices.empty()) throw std::invalid_argument("max-gsw needs at least one slice");
  double best = 0.0;
  for (const auto& theta : slices) best = std::max(best, slice_power_cost(g, x, y, theta, p));
  return root_p(best, p);
}

DistanceEstimate gsw(const PointCloud& x, const PointCloud& y, const DefiningFunctionSpec& spec, double p,
                     std::size_t slices, std::uint64_t seed) {
  if (slices < 1) throw std::invalid_argument("gsw needs L >= 1");
  const DefiningFunction g(spec);
  check_inputs(g, x, y, p);
  const auto thetas = sample_slices(spec, slices, seed);
  DistanceEstimate est;
  est.value = gsw_with_slices(g, x, y, thetas, p);
  est.p = p;
  est.slices = slices;
  est.seed = seed;
  est.spec = spec;
  return est;
}

DistanceEstimate max_gsw(const PointCloud& x, const PointCloud& y, const DefiningFunctionSpec& spec, double p,
                         const MaxSliceOptions& options, std::uint64_t seed) {
  if (options.restarts < 1) throw std::invalid_argument("max-gsw needs at least one restart");
  if (options.iterations < 0) throw std::invalid_argument("max-gsw iterations must be >= 0");
  const DefiningFunction g(spec);
  check_inputs(g, x, y, p);

  const SphereObjective objective = [&](const Vector& theta, Vector& grad) {
    return slice_power_cost_and_theta_gradient(g, x, y, theta, p, grad);
  };
  const AscentOptions ascent{options.iterations, options.tolerance, options.tangent_gradient};

  std::optional<ThetaParams> best_theta;
  double best = -1.0;
  for (int r = 0; r < options.restarts; ++r) {
    const auto init = sample_slices(spec, 1, derive_seed(seed, static_cast<std::uint64_t>(r)));
    AdamState state(g.theta_dim(), options.adam);
    const auto result = projected_ascent(objective, init.front(), ascent, state);
    if (result.best_value > best) {
      best = result.best_value;
      best_theta = result.best_theta;
    }
  }

  DistanceEstimate est;
  // Re-evaluated at theta* with a fresh sort.
  est.value = root_p(slice_power_cost(g, x, y, *best_theta, p), p);
  est.p = p;
  est.slices = 1;
  est.seed = seed;
  est.spec = spec;
  est.theta_star = best_theta;
  return est;
}

DistanceEstimate sw(const PointCloud& x, const PointCloud& y, double p, std::size_t slices, std::uint64_t seed) {
  return gsw(x, y, DefiningFunctionSpec::linear(x.dim()), p, slices, seed);
}

DistanceEstimate max_sw(const PointCloud& x, const PointCloud& y, double p, const MaxSliceOptions& options,
                        std::uint64_t seed) {
  return max_gsw(x, y, DefiningFunctionSpec::linear(x.dim()), p, options, seed);
}

}  // namespace gsw
