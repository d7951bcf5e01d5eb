#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace gsw {

// Seedable random source shared by every sampler in the library.
//
// The bit stream is std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Uniform doubles take the top 53 bits; Gaussian draws use the
// Box-Muller transform on those uniforms. The standard distribution classes
// are not used because their algorithms are implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform index in [0, n).
  std::size_t index(std::size_t n);
  // Standard normal.
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Child seed for an independent stream (repeat, iteration, restart, ...).
// SplitMix64 finalizer applied to the pair.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace gsw
