#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gsw/cli/commands.hpp"

namespace gsw::cli {

namespace {

void add_dataset_options(CLI::App* app, DatasetOptions& d, const std::string& prefix, const std::string& what) {
  app->add_option("--" + prefix + "kind", d.kind,
                  what + " dataset: gaussians8, gaussians25, swiss_roll, half_moons, circle, isotropic_gaussian");
  app->add_option("--" + prefix + "n", d.n, what + " sample count")->check(CLI::PositiveNumber);
  app->add_option("--" + prefix + "seed", d.seed, what + " sampling seed");
  app->add_option("--" + prefix + "scale", d.scale, what + " ring radius / grid spacing / std (<= 0: kind default)");
  app->add_option("--" + prefix + "noise", d.noise, what + " noise std (< 0: kind default)");
  app->add_option("--" + prefix + "dim", d.dim, what + " dimension (isotropic_gaussian)");
  app->add_option("--" + prefix + "mean", d.mean, what + " mean vector (isotropic_gaussian)")->delimiter(',')->default_str("");
}

void add_function_options(CLI::App* app, FunctionOptions& fn) {
  app->add_option("--defining-fn", fn.family, "Defining function: linear, circular, poly");
  app->add_option("--degree", fn.degree, "Polynomial degree (odd)");
  app->add_option("--radius", fn.radius, "Circular defining function radius");
}

void add_search_options(CLI::App* app, SearchOptions& s) {
  app->add_option("--theta-lr", s.theta_lr, "ADAM learning rate of the max-GSW slice search");
  app->add_option("--inner-iterations", s.inner_iterations, "Slice-search iterations per restart");
  app->add_option("--restarts", s.restarts, "Slice-search restarts");
}

// An empty list serializes as "" and would parse back as one empty element.
std::string without_empty_vectors(const std::string& config) {
  std::istringstream in(config);
  std::string out, line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    const auto key = line.substr(0, eq);
    const bool is_mean = key == "mean" || (key.size() > 5 && key.ends_with("-mean"));
    if (is_mean && eq != std::string::npos && line.substr(eq + 1) == "\"\"") continue;
    out += line + "\n";
  }
  return out;
}

void write_manifest(const std::filesystem::path& out_dir, const CLI::App* sub) {
  std::filesystem::create_directories(out_dir);
  std::ofstream out(out_dir / "manifest.ini", std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write manifest to " + out_dir.string());
  out << "# gsw run manifest; replay with: gsw --config manifest.ini\n"
      << "# per-repeat seeds are derive_seed(seed, repeat)\n"
      << "[" << sub->get_name() << "]\n"
      << without_empty_vectors(sub->config_to_str(true, false));
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Generalized sliced-Wasserstein distances, flows and benchmarks"};
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "Key-value config file, one [section] per subcommand; flags override it");
  app.require_subcommand(1);

  const char* env_dir = std::getenv("GSW_OUTPUT_DIR");
  const std::filesystem::path default_dir = env_dir && *env_dir ? env_dir : "gsw_out";

  SampleOptions sample_opts;
  sample_opts.out_dir = default_dir;
  auto* sample_cmd = app.add_subcommand("sample", "Draw a dataset and write it as CSV")->configurable();
  add_dataset_options(sample_cmd, sample_opts.data, "", "Dataset");
  sample_cmd->add_option("--out-dir", sample_opts.out_dir, "Output directory");

  DistanceOptions dist_opts;
  dist_opts.out_dir = default_dir;
  auto* dist_cmd = app.add_subcommand("distance", "Estimate SW / GSW / max-SW / max-GSW between two datasets")
                       ->configurable();
  dist_cmd->add_option("--method", dist_opts.method, "sw, gsw, max-sw or max-gsw");
  dist_cmd->add_option("--p", dist_opts.p, "Order p >= 1");
  dist_cmd->add_option("--slices", dist_opts.slices, "Slice count L");
  dist_cmd->add_option("--seed", dist_opts.seed, "Base seed; row r uses derive_seed(seed, r)");
  dist_cmd->add_option("--repeat", dist_opts.repeat, "Number of estimates");
  dist_cmd->add_flag("--with-oracle", dist_opts.with_oracle, "Attach the exact W_p");
  add_dataset_options(dist_cmd, dist_opts.x, "x-", "First");
  add_dataset_options(dist_cmd, dist_opts.y, "y-", "Second");
  add_function_options(dist_cmd, dist_opts.fn);
  add_search_options(dist_cmd, dist_opts.search);
  dist_cmd->add_option("--out-dir", dist_opts.out_dir, "Output directory");

  FlowOptions flow_opts;
  flow_opts.out_dir = default_dir;
  auto* flow_cmd = app.add_subcommand("flow", "Run (max-)GSW particle flows toward a target dataset")->configurable();
  auto* preset_opt = flow_cmd->add_option("--preset", flow_opts.preset,
                                          "fig2: 5 targets x {linear, circular, poly3, poly5}; fig5: max-gsw variant");
  flow_cmd->add_option("--method", flow_opts.method, "gsw or max-gsw (sw / max-sw force linear)");
  add_function_options(flow_cmd, flow_opts.fn);
  add_dataset_options(flow_cmd, flow_opts.source, "source-", "Source");
  add_dataset_options(flow_cmd, flow_opts.target, "target-", "Target");
  flow_cmd->add_option("--n", flow_opts.source.n, "Particle count (source and target)");
  flow_cmd->add_option("--p", flow_opts.p, "Order p >= 1");
  flow_cmd->add_option("--slices", flow_opts.slices, "Slices per iteration (gsw)");
  flow_cmd->add_option("--iterations", flow_opts.iterations, "Flow iterations");
  flow_cmd->add_option("--oracle-every", flow_opts.oracle_every, "Oracle cadence");
  flow_cmd->add_flag("--with-oracle", flow_opts.with_oracle, "Record exact W2 (forced on by presets)");
  auto* repeat_opt = flow_cmd->add_option("--repeat", flow_opts.repeat, "Independent repeats");
  flow_cmd->add_option("--seed", flow_opts.seed, "Base seed");
  flow_cmd->add_option("--lr", flow_opts.lr, "Particle ADAM learning rate");
  add_search_options(flow_cmd, flow_opts.search);
  flow_cmd->add_flag("--svg", flow_opts.svg, "Write an SVG chart of mean log10 W2");
  flow_cmd->add_option("--out-dir", flow_opts.out_dir, "Output directory");

  BenchOptions bench_opts;
  bench_opts.out_dir = default_dir;
  auto* bench_cmd = app.add_subcommand("bench", "Timing sweep and property suite")->configurable();
  bench_cmd->add_option("--sizes", bench_opts.sizes, "Sample counts N")->delimiter(',');
  bench_cmd->add_option("--dims", bench_opts.dims, "Dimensions d")->delimiter(',');
  bench_cmd->add_option("--slices", bench_opts.slices, "Slice counts L")->delimiter(',');
  bench_cmd->add_option("--ops", bench_opts.ops, "gsw, exact")->delimiter(',');
  bench_cmd->add_option("--timeout", bench_opts.timeout, "Per-call budget for exact_wp, seconds");
  bench_cmd->add_flag("--properties", bench_opts.properties, "Run the property suite");
  bench_cmd->add_option("--trials", bench_opts.trials, "Property-suite trials");
  bench_cmd->add_option("--seed", bench_opts.seed, "Seed");
  bench_cmd->add_option("--out-dir", bench_opts.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (sample_cmd->parsed()) {
      write_manifest(sample_opts.out_dir, sample_cmd);
      return cmd_sample(sample_opts, std::cout);
    }
    if (dist_cmd->parsed()) {
      write_manifest(dist_opts.out_dir, dist_cmd);
      return cmd_distance(dist_opts, std::cout);
    }
    if (flow_cmd->parsed()) {
      flow_opts.target.n = flow_opts.source.n;
      if (preset_opt->count() > 0 && !flow_opts.preset.empty()) {
        // Preset protocol: 100 repeats and a circular radius on the scale of
        // the targets unless given explicitly.
        // The new defaults are what the manifest records.
        if (repeat_opt->count() == 0) {
          flow_opts.repeat = 100;
          repeat_opt->default_val(flow_opts.repeat);
        }
        if (auto* radius = flow_cmd->get_option("--radius"); radius->count() == 0) {
          flow_opts.fn.radius = 4.0;
          radius->default_val(flow_opts.fn.radius);
        }
      }
      write_manifest(flow_opts.out_dir, flow_cmd);
      return cmd_flow(flow_opts, std::cout);
    }
    if (bench_cmd->parsed()) {
      write_manifest(bench_opts.out_dir, bench_cmd);
      return cmd_bench(bench_opts, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace gsw::cli
