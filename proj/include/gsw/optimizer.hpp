#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

#include "gsw/defining_function.hpp"
#include "gsw/point_cloud.hpp"

namespace gsw {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Moment estimates for one optimization run.
struct AdamState {
  AdamState(std::size_t dim, AdamConfig config);

  AdamConfig config;
  Vector m;
  Vector v;
  long long t = 0;
};

// Raised when an update produces non-finite values.
class OptimizerDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One bias-corrected ADAM descent step: var -= lr * m_hat / (sqrt(v_hat) + eps).
// Throws std::invalid_argument on a dimension mismatch and
// OptimizerDivergence on a non-finite gradient.
void adam_step(AdamState& state, ConstVectorRef grad, Eigen::Ref<Vector> var);

// Objective callback for sphere-constrained ascent: returns f(theta) and
// writes grad f(theta) into grad.
using SphereObjective = std::function<double(const Vector& theta, Vector& grad)>;

struct AscentOptions {
  int steps = 50;
  // Stop early once ||theta_new - theta_old|| < tolerance. 0 disables.
  double tolerance = 1e-6;
  // Drop the radial component of the gradient before the ADAM update.
  bool tangent_gradient = true;
};

struct AscentResult {
  ThetaParams theta;       // final iterate
  ThetaParams best_theta;  // best visited iterate
  double best_value;
  double initial_value;
  int steps_taken = 0;
};

// Maximizes f over the unit sphere: ADAM on -grad f followed by
// renormalization after every step.
AscentResult projected_ascent(const SphereObjective& objective, const ThetaParams& init,
                              const AscentOptions& options, AdamState& state);

}  // namespace gsw
