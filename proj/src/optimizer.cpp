#include "gsw/optimizer.hpp"

#include <cmath>

namespace gsw {

AdamState::AdamState(std::size_t dim, AdamConfig cfg)
    : config(cfg),
      m(Vector::Zero(static_cast<Eigen::Index>(dim))),
      v(Vector::Zero(static_cast<Eigen::Index>(dim))) {
  if (!(cfg.lr > 0.0) || !(cfg.beta1 >= 0.0 && cfg.beta1 < 1.0) || !(cfg.beta2 >= 0.0 && cfg.beta2 < 1.0) ||
      !(cfg.eps > 0.0)) {
    throw std::invalid_argument("invalid ADAM hyperparameters");
  }
}

void adam_step(AdamState& state, ConstVectorRef grad, Eigen::Ref<Vector> var) {
  if (grad.size() != state.m.size() || var.size() != state.m.size()) {
    throw std::invalid_argument("adam_step: dimension mismatch");
  }
  if (!grad.allFinite()) throw OptimizerDivergence("adam_step: non-finite gradient");
  const auto& c = state.config;
  ++state.t;
  state.m = c.beta1 * state.m + (1.0 - c.beta1) * grad;
  state.v = c.beta2 * state.v + (1.0 - c.beta2) * grad.cwiseAbs2();
  const double bias1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.t));
  const double bias2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.t));
  var.array() -= c.lr * (state.m.array() / bias1) / ((state.v.array() / bias2).sqrt() + c.eps);
}

AscentResult projected_ascent(const SphereObjective& objective, const ThetaParams& init,
                              const AscentOptions& options, AdamState& state) {
  Vector theta = init.vector();
  Vector grad(theta.size());
  const double initial = objective(theta, grad);
  double best = initial;
  Vector best_theta = theta;
  int taken = 0;

  for (int step = 0; step < options.steps; ++step) {
    if (step > 0) {
      const double value = objective(theta, grad);
      if (value > best) {
        best = value;
        best_theta = theta;
      }
    }
    if (options.tangent_gradient) grad -= grad.dot(theta) * theta;
    Vector next = theta;
    adam_step(state, -grad, next);
    const double norm = next.norm();
    if (!std::isfinite(norm) || norm == 0.0) throw OptimizerDivergence("projected_ascent: iterate left the domain");
    next /= norm;
    ++taken;
    const double moved = (next - theta).norm();
    theta = std::move(next);
    if (moved < options.tolerance) break;
  }
  if (taken > 0) {
    const double value = objective(theta, grad);
    if (value > best) {
      best = value;
      best_theta = theta;
    }
  }
  return AscentResult{ThetaParams(std::move(theta)), ThetaParams(std::move(best_theta)), best, initial, taken};
}

}  // namespace gsw
