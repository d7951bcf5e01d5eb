#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gsw/defining_function.hpp"
#include "gsw/optimizer.hpp"
#include "gsw/point_cloud.hpp"

namespace gsw {

struct DistanceEstimate {
  double value = 0.0;
  double p = 2.0;
  std::size_t slices = 0;  // L for gsw, 1 for max-gsw
  std::uint64_t seed = 0;
  DefiningFunctionSpec spec;
  std::optional<ThetaParams> theta_star;  // max-gsw only
};

// Settings for the slice search of max-GSW.
struct MaxSliceOptions {
  AdamConfig adam{.lr = 0.05};
  int iterations = 50;
  double tolerance = 1e-6;
  int restarts = 4;
  // Feed ADAM the gradient component tangent to the sphere.
  bool tangent_gradient = true;
};

// (1/N) sum_n |g(x_[n], theta) - g(y_[n], theta)|^p under the sorted matching,
// i.e. W_p^p between the two slices.
double slice_power_cost(const DefiningFunction& g, const PointCloud& x, const PointCloud& y,
                        const ThetaParams& theta, double p);

// As slice_power_cost, also writing its gradient in theta into grad with the
// sorted matching held fixed.
double slice_power_cost_and_theta_gradient(const DefiningFunction& g, const PointCloud& x,
                                           const PointCloud& y, const Vector& theta, double p,
                                           Vector& grad);

// GSW estimate over a caller-supplied slice set:
// (1/L sum_l W_p^p(slice l))^(1/p).
double gsw_with_slices(const DefiningFunction& g, const PointCloud& x, const PointCloud& y,
                       std::span<const ThetaParams> slices, double p);

// max_l W_p(slice l) over a caller-supplied slice set.
double max_gsw_over_slices(const DefiningFunction& g, const PointCloud& x, const PointCloud& y,
                           std::span<const ThetaParams> slices, double p);

// Monte-Carlo GSW with L slices drawn uniformly from the parameter sphere.
DistanceEstimate gsw(const PointCloud& x, const PointCloud& y, const DefiningFunctionSpec& spec, double p,
                     std::size_t slices, std::uint64_t seed);

// max-GSW by alternating sort / projected ADAM ascent on theta, keeping the
// best slice visited over all restarts. Throws OptimizerDivergence if the
// iterate becomes non-finite.
DistanceEstimate max_gsw(const PointCloud& x, const PointCloud& y, const DefiningFunctionSpec& spec, double p,
                         const MaxSliceOptions& options, std::uint64_t seed);

DistanceEstimate sw(const PointCloud& x, const PointCloud& y, double p, std::size_t slices, std::uint64_t seed);
DistanceEstimate max_sw(const PointCloud& x, const PointCloud& y, double p, const MaxSliceOptions& options,
                        std::uint64_t seed);

}  // namespace gsw
