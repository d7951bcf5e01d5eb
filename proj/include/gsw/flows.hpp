#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gsw/defining_function.hpp"
#include "gsw/distances.hpp"
#include "gsw/exact_oracle.hpp"
#include "gsw/optimizer.hpp"
#include "gsw/point_cloud.hpp"

namespace gsw {

enum class FlowMethod { gsw, max_gsw };

struct FlowConfig {
  DefiningFunctionSpec spec{};
  double p = 2.0;
  std::size_t slices = 10;
  FlowMethod method = FlowMethod::gsw;
  int iterations = 500;
  // ADAM on particle positions.
  AdamConfig particle_adam{.lr = 0.05};
  // Slice search used by max_gsw flows, one search per iteration.
  MaxSliceOptions max_slice{.restarts = 1};
  bool with_oracle = true;
  int oracle_every = 10;
  OracleOptions oracle{};
  std::uint64_t seed = 0;

  void validate() const;
};

struct FlowRecord {
  int iteration = 0;
  double estimate = 0.0;  // GSW_p (or max-GSW_p) at the start of the iteration
  std::optional<double> oracle_w2;
};

struct FlowTrace {
  // One record per iteration, taken before that iteration's particle update.
  std::vector<FlowRecord> records;
  PointCloud final_cloud;
  // Oracle W2 after the last update, when the oracle is enabled.
  std::optional<double> final_oracle_w2;
};

// Gradient in the source positions of (1/L) sum_l W_p^p(slice l), with the
// per-slice sorted matchings held fixed. Returns an N x d matrix.
Matrix flow_gradient(const PointCloud& x, const PointCloud& y, std::span<const ThetaParams> slices,
                     const DefiningFunctionSpec& spec, double p);

// Moves the source particles toward the target by ADAM descent on the
// sliced objective: fresh slices every iteration (gsw), or the optimized
// slice of a max-GSW search (max_gsw). Deterministic for a fixed seed.
FlowTrace run_flow(const PointCloud& source, const PointCloud& target, const FlowConfig& config);

}  // namespace gsw
