#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsw/point_cloud.hpp"

namespace gsw {

enum class DatasetKind { gaussians8, gaussians25, swiss_roll, half_moons, circle, isotropic_gaussian };

std::string_view to_string(DatasetKind kind);
// Accepts the names printed by to_string plus the hyphenated CLI spellings
// ("8gaussians", "swiss-roll", ...). Throws std::invalid_argument otherwise.
DatasetKind parse_dataset_kind(std::string_view name);

// Unset optional parameters take the per-kind defaults below.
//
//   kind                scale                      noise
//   gaussians8          ring radius 4              component std 0.2
//   gaussians25         grid spacing 2 (5x5)       component std 0.05
//   swiss_roll          radius factor 0.5 (r=s*t)  noise std 0.1
//   half_moons          moon radius 1              noise std 0.05
//   circle              radius 2                   noise std 0.05
//   isotropic_gaussian  std 1                      unused
struct DatasetSpec {
  DatasetKind kind = DatasetKind::isotropic_gaussian;
  std::size_t n_samples = 1;
  std::uint64_t seed = 0;
  std::optional<double> scale{};
  std::optional<double> noise{};
  // isotropic_gaussian only; other kinds are 2-D. Empty mean means the origin.
  std::size_t dim = 2;
  std::vector<double> mean{};

  double effective_scale() const;
  double effective_noise() const;
  std::size_t effective_dim() const;
  // Throws std::invalid_argument on a non-positive sample count or scale, a
  // negative noise level, or a mean of the wrong length.
  void validate() const;
};

struct LabeledCloud {
  PointCloud cloud;
  // Mixture component (gaussians8/25) or moon index (half_moons); 0 otherwise.
  std::vector<int> labels;
};

PointCloud sample(const DatasetSpec& spec);
LabeledCloud sample_labeled(const DatasetSpec& spec);

// Component centers of the mixture kinds, in label order. Empty otherwise.
std::vector<Vector> component_means(const DatasetSpec& spec);

// Uniform draws from S^{dim-1}: Gaussian vectors, normalized.
std::vector<Vector> sample_unit_sphere(std::size_t dim, std::size_t count, std::uint64_t seed);

}  // namespace gsw
