#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsw/datasets.hpp"
#include "gsw/defining_function.hpp"
#include "gsw/distances.hpp"

namespace gsw::cli {

// Dataset flags. scale <= 0 and noise < 0 select the kind defaults.
struct DatasetOptions {
  std::string kind = "isotropic_gaussian";
  std::size_t n = 500;
  std::uint64_t seed = 0;
  double scale = 0.0;
  double noise = -1.0;
  std::size_t dim = 2;
  std::vector<double> mean{};

  DatasetSpec to_spec() const;
};

struct FunctionOptions {
  std::string family = "linear";
  int degree = 3;
  double radius = 1.0;

  DefiningFunctionSpec to_spec(std::size_t data_dim) const;
};

struct SearchOptions {
  double theta_lr = 0.05;
  int inner_iterations = 50;
  int restarts = 4;

  MaxSliceOptions to_options() const;
};

struct SampleOptions {
  DatasetOptions data;
  std::filesystem::path out_dir = "gsw_out";
};

struct DistanceOptions {
  std::string method = "sw";  // sw | gsw | max-sw | max-gsw
  double p = 2.0;
  std::size_t slices = 10;
  std::uint64_t seed = 0;
  int repeat = 1;
  bool with_oracle = false;
  DatasetOptions x{.kind = "isotropic_gaussian", .seed = 1};
  DatasetOptions y{.kind = "gaussians8", .seed = 2};
  FunctionOptions fn;
  SearchOptions search;
  std::filesystem::path out_dir = "gsw_out";
};

struct FlowOptions {
  // "fig2": 5 targets x {linear, circular, poly3, poly5}, gsw flows.
  // "fig5": the same sweep with max-gsw flows.
  std::string preset;
  DatasetOptions source{.kind = "isotropic_gaussian"};
  DatasetOptions target{.kind = "gaussians8"};
  std::string method = "gsw";  // gsw | max-gsw (sw / max-sw force linear)
  FunctionOptions fn;
  double p = 2.0;
  std::size_t slices = 10;
  int iterations = 500;
  int oracle_every = 10;
  bool with_oracle = false;
  int repeat = 1;
  std::uint64_t seed = 0;
  double lr = 0.05;
  SearchOptions search{.restarts = 1};
  bool svg = false;
  std::filesystem::path out_dir = "gsw_out";
};

struct BenchOptions {
  std::vector<std::size_t> sizes{128, 256, 512};
  std::vector<std::size_t> dims{2};
  std::vector<std::size_t> slices{10};
  std::vector<std::string> ops{"gsw", "exact"};
  double timeout = 60.0;
  bool properties = false;
  int trials = 100;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "gsw_out";
};

// Each command returns a process exit code and throws std::invalid_argument
// on invalid configuration.

// Writes samples.csv (x0..x{d-1},label).
int cmd_sample(const SampleOptions& options, std::ostream& out);
// Prints and writes distance.csv: method,p,L,seed,value,oracle.
int cmd_distance(const DistanceOptions& options, std::ostream& out);
// Writes trace_r<k>.csv (iter,estimate,oracle_w2), aggregate.csv and
// summary.csv per run directory, plus SVG charts when requested.
int cmd_flow(const FlowOptions& options, std::ostream& log);
// Writes bench.csv (op,N,d,L,seconds) and, with --properties, properties.csv.
int cmd_bench(const BenchOptions& options, std::ostream& out);

// Full command line front-end. Writes <out-dir>/manifest.ini for every run.
int run_cli(int argc, const char* const* argv);

}  // namespace gsw::cli
