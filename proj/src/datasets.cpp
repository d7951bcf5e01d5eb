#include "gsw/datasets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gsw/random.hpp"

namespace gsw {

namespace {

constexpr double kPi = std::numbers::pi;

struct KindDefaults {
  double scale;
  double noise;
};

KindDefaults defaults_for(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::gaussians8: return {4.0, 0.2};
    case DatasetKind::gaussians25: return {2.0, 0.05};
    case DatasetKind::swiss_roll: return {0.5, 0.1};
    case DatasetKind::half_moons: return {1.0, 0.05};
    case DatasetKind::circle: return {2.0, 0.05};
    case DatasetKind::isotropic_gaussian: return {1.0, 0.0};
  }
  throw std::invalid_argument("unknown dataset kind");
}

}  // namespace

std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::gaussians8: return "gaussians8";
    case DatasetKind::gaussians25: return "gaussians25";
    case DatasetKind::swiss_roll: return "swiss_roll";
    case DatasetKind::half_moons: return "half_moons";
    case DatasetKind::circle: return "circle";
    case DatasetKind::isotropic_gaussian: return "isotropic_gaussian";
  }
  return "unknown";
}

DatasetKind parse_dataset_kind(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(c)));
  if (key == "gaussians8" || key == "8gaussians" || key == "8_gaussians") return DatasetKind::gaussians8;
  if (key == "gaussians25" || key == "25gaussians" || key == "25_gaussians") return DatasetKind::gaussians25;
  if (key == "swiss_roll" || key == "swissroll") return DatasetKind::swiss_roll;
  if (key == "half_moons" || key == "moons") return DatasetKind::half_moons;
  if (key == "circle") return DatasetKind::circle;
  if (key == "isotropic_gaussian" || key == "gaussian" || key == "normal") return DatasetKind::isotropic_gaussian;
  throw std::invalid_argument("unknown dataset kind '" + std::string(name) + "'");
}

double DatasetSpec::effective_scale() const { return scale.value_or(defaults_for(kind).scale); }
double DatasetSpec::effective_noise() const { return noise.value_or(defaults_for(kind).noise); }

std::size_t DatasetSpec::effective_dim() const {
  return kind == DatasetKind::isotropic_gaussian ? dim : 2;
}

void DatasetSpec::validate() const {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be positive");
  const double s = effective_scale();
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("dataset scale must be positive");
  const double eta = effective_noise();
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw std::invalid_argument("dataset noise must be >= 0");
  if (kind == DatasetKind::isotropic_gaussian) {
    if (dim < 1) throw std::invalid_argument("isotropic_gaussian needs dim >= 1");
    if (!mean.empty() && mean.size() != dim) {
      throw std::invalid_argument("mean vector length does not match dim");
    }
  }
}

std::vector<Vector> component_means(const DatasetSpec& spec) {
  std::vector<Vector> means;
  const double s = spec.effective_scale();
  if (spec.kind == DatasetKind::gaussians8) {
    for (int k = 0; k < 8; ++k) {
      const double a = 2.0 * kPi * k / 8.0;
      means.push_back(Vector{{s * std::cos(a), s * std::sin(a)}});
    }
  } else if (spec.kind == DatasetKind::gaussians25) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) means.push_back(Vector{{(i - 2) * s, (j - 2) * s}});
    }
  }
  return means;
}

LabeledCloud sample_labeled(const DatasetSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const std::size_t n = spec.n_samples;
  const std::size_t d = spec.effective_dim();
  const double s = spec.effective_scale();
  const double eta = spec.effective_noise();
  Matrix pts(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  std::vector<int> labels(n, 0);

  switch (spec.kind) {
    case DatasetKind::gaussians8:
    case DatasetKind::gaussians25: {
      const auto means = component_means(spec);
      for (std::size_t i = 0; i < n; ++i) {
        const auto k = rng.index(means.size());
        labels[i] = static_cast<int>(k);
        const double u = rng.normal();
        const double v = rng.normal();
        pts(i, 0) = means[k](0) + eta * u;
        pts(i, 1) = means[k](1) + eta * v;
      }
      break;
    }
    case DatasetKind::swiss_roll: {
      for (std::size_t i = 0; i < n; ++i) {
        const double t = rng.uniform(1.5 * kPi, 4.5 * kPi);
        const double u = rng.normal();
        const double v = rng.normal();
        pts(i, 0) = s * t * std::cos(t) + eta * u;
        pts(i, 1) = s * t * std::sin(t) + eta * v;
      }
      break;
    }
    case DatasetKind::half_moons: {
      // Two interleaved crescents: upper (cos t, sin t), lower
      // (1 - cos t, 1/2 - sin t), t in [0, pi]; points alternate moons.
      for (std::size_t i = 0; i < n; ++i) {
        const double t = rng.uniform(0.0, kPi);
        const double u = rng.normal();
        const double v = rng.normal();
        labels[i] = static_cast<int>(i % 2);
        if (labels[i] == 0) {
          pts(i, 0) = s * std::cos(t);
          pts(i, 1) = s * std::sin(t);
        } else {
          pts(i, 0) = s * (1.0 - std::cos(t));
          pts(i, 1) = s * (0.5 - std::sin(t));
        }
        pts(i, 0) += eta * u;
        pts(i, 1) += eta * v;
      }
      break;
    }
    case DatasetKind::circle: {
      for (std::size_t i = 0; i < n; ++i) {
        const double a = rng.uniform(0.0, 2.0 * kPi);
        const double u = rng.normal();
        const double v = rng.normal();
        pts(i, 0) = s * std::cos(a) + eta * u;
        pts(i, 1) = s * std::sin(a) + eta * v;
      }
      break;
    }
    case DatasetKind::isotropic_gaussian: {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const double mu = spec.mean.empty() ? 0.0 : spec.mean[j];
          pts(i, j) = mu + s * rng.normal();
        }
      }
      break;
    }
  }
  return LabeledCloud{PointCloud(std::move(pts)), std::move(labels)};
}

PointCloud sample(const DatasetSpec& spec) { return sample_labeled(spec).cloud; }

std::vector<Vector> sample_unit_sphere(std::size_t dim, std::size_t count, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("sphere dimension must be >= 1");
  Rng rng(seed);
  std::vector<Vector> out;
  out.reserve(count);
  while (out.size() < count) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (auto& c : v) c = rng.normal();
    const double norm = v.norm();
    if (norm == 0.0) continue;
    out.push_back(v / norm);
  }
  return out;
}

}  // namespace gsw
