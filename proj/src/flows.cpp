#include "gsw/flows.hpp"

#include <cmath>
#include <stdexcept>

#include "gsw/one_d_ot.hpp"
#include "gsw/random.hpp"

namespace gsw {

namespace {

double sign_of(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// Mean slice cost (1/L sum_l W_p^p) and, optionally, its gradient in x.
double sliced_objective(const DefiningFunction& g, const PointCloud& x, const PointCloud& y,
                        std::span<const ThetaParams> slices, double p, Matrix* grad) {
  const auto n = x.size();
  const double scale = 1.0 / (static_cast<double>(slices.size()) * static_cast<double>(n));
  if (grad) *grad = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(x.dim()));
  std::vector<double> px, py;
  double total = 0.0;
  for (const auto& theta : slices) {
    g.project(x, theta.vector(), px);
    g.project(y, theta.vector(), py);
    const auto ix = sort_permutation(px);
    const auto iy = sort_permutation(py);
    double slice_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double diff = px[ix[k]] - py[iy[k]];
      slice_sum += power_abs(diff, p);
      if (!grad || diff == 0.0) continue;
      const double w = p * power_abs(diff, p - 1.0) * sign_of(diff) * scale;
      grad->row(static_cast<Eigen::Index>(ix[k])) += w * g.grad_x(theta.vector(), x.point(ix[k])).transpose();
    }
    total += slice_sum / static_cast<double>(n);
  }
  return total / static_cast<double>(slices.size());
}

}  // namespace

void FlowConfig::validate() const {
  spec.validate();
  require_valid_order(p);
  if (iterations < 1) throw std::invalid_argument("flow iterations must be >= 1");
  if (oracle_every < 1) throw std::invalid_argument("oracle_every must be >= 1");
  if (method == FlowMethod::gsw && slices < 1) throw std::invalid_argument("flow needs L >= 1");
}

Matrix flow_gradient(const PointCloud& x, const PointCloud& y, std::span<const ThetaParams> slices,
                     const DefiningFunctionSpec& spec, double p) {
  require_valid_order(p);
  require_same_shape(x, y);
  if (slices.empty()) throw std::invalid_argument("flow_gradient needs at least one slice");
  const DefiningFunction g(spec);
  Matrix grad;
  sliced_objective(g, x, y, slices, p, &grad);
  return grad;
}

FlowTrace run_flow(const PointCloud& source, const PointCloud& target, const FlowConfig& config) {
  config.validate();
  require_same_shape(source, target);
  const DefiningFunction g(config.spec);
  if (source.dim() != g.data_dim()) throw std::invalid_argument("cloud dimension does not match the defining function");

  Matrix particles = source.matrix();
  AdamState adam(static_cast<std::size_t>(particles.size()), config.particle_adam);
  std::vector<FlowRecord> records;
  records.reserve(static_cast<std::size_t>(config.iterations));

  for (int it = 0; it < config.iterations; ++it) {
    const PointCloud current(particles);
    const auto iter_seed = derive_seed(config.seed, static_cast<std::uint64_t>(it));

    std::vector<ThetaParams> slices;
    if (config.method == FlowMethod::gsw) {
      slices = sample_slices(config.spec, config.slices, iter_seed);
    } else {
      auto est = max_gsw(current, target, config.spec, config.p, config.max_slice, iter_seed);
      slices.push_back(*est.theta_star);
    }

    Matrix grad;
    double objective = 0.0;
    // A slice through a particle sitting exactly on the circular
    // singularity is redrawn.
    for (std::uint64_t attempt = 0;; ++attempt) {
      try {
        objective = sliced_objective(g, current, target, slices, config.p, &grad);
        break;
      } catch (const DegeneratePointError&) {
        if (attempt >= 16) throw;
        slices = sample_slices(config.spec, slices.size(), derive_seed(iter_seed, attempt + 1));
      }
    }

    FlowRecord rec;
    rec.iteration = it;
    rec.estimate = root_p(objective, config.p);
    if (config.with_oracle && it % config.oracle_every == 0) {
      rec.oracle_w2 = exact_wp(current, target, 2.0, config.oracle).cost;
    }
    records.push_back(rec);

    Eigen::Map<Vector> flat(particles.data(), particles.size());
    Eigen::Map<const Vector> flat_grad(grad.data(), grad.size());
    adam_step(adam, flat_grad, flat);
  }

  FlowTrace trace{std::move(records), PointCloud(std::move(particles)), std::nullopt};
  if (config.with_oracle) trace.final_oracle_w2 = exact_wp(trace.final_cloud, target, 2.0, config.oracle).cost;
  return trace;
}

}  // namespace gsw
