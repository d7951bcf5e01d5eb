#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsw/defining_function.hpp"

namespace gsw {

enum class Method { sw, gsw, max_sw, max_gsw };

std::string_view to_string(Method method);
// "sw", "gsw", "max-sw", "max-gsw" (underscores accepted).
Method parse_method(std::string_view name);

struct PropertyReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  // Trials skipped by a documented exclusion rule (near-singular circular
  // points, optimizer failure on soft bounds). Not counted in trials.
  int excluded = 0;
  double worst_violation = 0.0;

  bool passed() const { return failures == 0; }
};

// Tolerances. Identities that hold exactly in floating point are compared
// with ==; accumulated sums get absolute slack.
inline constexpr double kTriangleSlack = 1e-9;      // Minkowski sum, roundoff only
inline constexpr double kLipschitzSlack = 1e-9;     // slice cost <= transport cost
inline constexpr double kGradientRelTol = 1e-5;     // central differences, h = 1e-5
inline constexpr double kFiniteDifferenceStep = 1e-5;
inline constexpr double kMaxSliceSlack = 1e-6;      // average <= max, optimizer slack
inline constexpr double kOneDimRelTol = 1e-10;      // same sums, different order
// Optimized slice vs closed form for single-point clouds: the ADAM iterate
// settles within ~lr of the optimum, giving O(lr^2) relative error.
inline constexpr double kSinglePointRelTol = 1e-3;
// Circular gradient trials with ||x - r theta|| below this are excluded.
inline constexpr double kSingularExclusion = 1e-3;

// Non-negativity, exact symmetry, exact d(x,x) = 0 and the triangle
// inequality on random cloud triples, all pairs evaluated with one shared
// slice set. For max methods the shared set holds random slices plus the
// optimized slice of every pair.
PropertyReport check_metric_axioms(Method method, const DefiningFunctionSpec& spec, int trials, std::uint64_t seed);

// Finite-difference agreement of grad_x, grad_theta and flow_gradient.
// Returns one report per gradient.
std::vector<PropertyReport> check_gradients(const DefiningFunctionSpec& spec, int trials, std::uint64_t seed);

// sw <= W_p, gsw(circular) <= W_p, gsw <= max-gsw, 1-D sw == wasserstein_1d,
// and single-point max-sw == W_p == ||a - b||. One report per bound.
std::vector<PropertyReport> check_bounds(int trials, std::uint64_t seed);

}  // namespace gsw
