#include "gsw/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include "gsw/cli/report.hpp"
#include "gsw/exact_oracle.hpp"
#include "gsw/flows.hpp"
#include "gsw/properties.hpp"
#include "gsw/random.hpp"

namespace gsw::cli {

namespace fs = std::filesystem;

DatasetSpec DatasetOptions::to_spec() const {
  DatasetSpec spec;
  spec.kind = parse_dataset_kind(kind);
  spec.n_samples = n;
  spec.seed = seed;
  if (scale > 0.0) spec.scale = scale;
  if (noise >= 0.0) spec.noise = noise;
  spec.dim = dim;
  spec.mean = mean;
  spec.validate();
  return spec;
}

DefiningFunctionSpec FunctionOptions::to_spec(std::size_t data_dim) const {
  DefiningFunctionSpec spec{parse_family(family), 1, radius, data_dim};
  if (spec.family == Family::poly_homogeneous) spec.degree = degree;
  spec.validate();
  return spec;
}

MaxSliceOptions SearchOptions::to_options() const {
  MaxSliceOptions o;
  o.adam.lr = theta_lr;
  o.iterations = inner_iterations;
  o.restarts = restarts;
  return o;
}

namespace {

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  auto out = open_output(path);
  out << content;
}

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

}  // namespace

int cmd_sample(const SampleOptions& options, std::ostream& out) {
  const auto labeled = sample_labeled(options.data.to_spec());
  const auto& m = labeled.cloud.matrix();
  std::string csv;
  for (Eigen::Index j = 0; j < m.cols(); ++j) csv += "x" + std::to_string(j) + ",";
  csv += "label\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) csv += format_number(m(i, j)) + ",";
    csv += std::to_string(labeled.labels[static_cast<std::size_t>(i)]) + "\n";
  }
  write_file(options.out_dir / "samples.csv", csv);
  out << "wrote " << m.rows() << " samples to " << (options.out_dir / "samples.csv").string() << "\n";
  return 0;
}

int cmd_distance(const DistanceOptions& options, std::ostream& out) {
  if (options.repeat < 1) throw std::invalid_argument("repeat must be >= 1");
  const Method method = parse_method(options.method);
  const PointCloud x = sample(options.x.to_spec());
  const PointCloud y = sample(options.y.to_spec());
  require_same_shape(x, y);
  const bool linear = method == Method::sw || method == Method::max_sw;
  const auto spec = linear ? DefiningFunctionSpec::linear(x.dim()) : options.fn.to_spec(x.dim());
  const auto search = options.search.to_options();

  std::optional<double> oracle;
  if (options.with_oracle) oracle = exact_wp(x, y, options.p).cost;

  std::string csv = "method,p,L,seed,value,oracle\n";
  for (int r = 0; r < options.repeat; ++r) {
    const auto seed = derive_seed(options.seed, static_cast<std::uint64_t>(r));
    const bool is_max = method == Method::max_sw || method == Method::max_gsw;
    const auto est = is_max ? max_gsw(x, y, spec, options.p, search, seed)
                            : gsw(x, y, spec, options.p, options.slices, seed);
    csv += std::string(to_string(method)) + "," + format_number(options.p) + "," + std::to_string(est.slices) + "," +
           std::to_string(seed) + "," + format_number(est.value) + "," + optional_number(oracle) + "\n";
  }
  write_file(options.out_dir / "distance.csv", csv);
  out << csv;
  return 0;
}

namespace {

struct FlowRunSummary {
  std::string label;
  // (iteration, mean log10 W2) points including the final state.
  std::vector<std::pair<double, double>> curve;
};

FlowRunSummary run_flow_set(const FlowOptions& options, const DatasetOptions& target_options,
                            const FunctionOptions& fn, FlowMethod method, const fs::path& dir, std::ostream& log) {
  FlowConfig config;
  config.p = options.p;
  config.slices = options.slices;
  config.method = method;
  config.iterations = options.iterations;
  config.particle_adam.lr = options.lr;
  config.max_slice = options.search.to_options();
  config.with_oracle = options.with_oracle;
  config.oracle_every = options.oracle_every;

  std::vector<FlowTrace> traces;
  std::string summary = "repeat,seed,initial_oracle_w2,final_oracle_w2,final_estimate\n";
  for (int r = 0; r < options.repeat; ++r) {
    const auto repeat_seed = derive_seed(options.seed, static_cast<std::uint64_t>(r));
    DatasetOptions src = options.source, dst = target_options;
    src.seed = derive_seed(repeat_seed, 1);
    dst.seed = derive_seed(repeat_seed, 2);
    const PointCloud source = sample(src.to_spec());
    const PointCloud target = sample(dst.to_spec());
    require_same_shape(source, target);
    config.spec = fn.to_spec(source.dim());
    config.seed = derive_seed(repeat_seed, 3);
    auto trace = run_flow(source, target, config);

    std::string csv = "iter,estimate,oracle_w2\n";
    for (const auto& rec : trace.records) {
      csv += std::to_string(rec.iteration) + "," + format_number(rec.estimate) + "," + optional_number(rec.oracle_w2) +
             "\n";
    }
    write_file(dir / ("trace_r" + std::to_string(r) + ".csv"), csv);
    summary += std::to_string(r) + "," + std::to_string(repeat_seed) + "," +
               optional_number(trace.records.front().oracle_w2) + "," + optional_number(trace.final_oracle_w2) + "," +
               format_number(trace.records.back().estimate) + "\n";
    traces.push_back(std::move(trace));
  }
  write_file(dir / "summary.csv", summary);

  FlowRunSummary result{config.spec.label(), {}};
  std::string agg = "iter,mean_estimate,mean_log10_w2,std_log10_w2,repeats\n";
  for (std::size_t k = 0; k < traces.front().records.size(); ++k) {
    std::vector<double> estimates, logs;
    for (const auto& t : traces) {
      estimates.push_back(t.records[k].estimate);
      if (t.records[k].oracle_w2) logs.push_back(std::log10(*t.records[k].oracle_w2));
    }
    agg += std::to_string(k) + "," + format_number(mean(estimates)) + ",";
    if (!logs.empty()) {
      agg += format_number(mean(logs)) + "," + format_number(sample_std(logs));
      result.curve.emplace_back(static_cast<double>(k), mean(logs));
    } else {
      agg += ",";
    }
    agg += "," + std::to_string(traces.size()) + "\n";
  }
  write_file(dir / "aggregate.csv", agg);
  if (options.with_oracle) {
    std::vector<double> finals;
    for (const auto& t : traces) finals.push_back(std::log10(*t.final_oracle_w2));
    result.curve.emplace_back(static_cast<double>(options.iterations), mean(finals));
  }
  log << "flow " << to_string(parse_dataset_kind(target_options.kind)) << " " << result.label << ": "
      << options.repeat << " repeat(s) -> " << dir.string() << "\n";
  return result;
}

}  // namespace

int cmd_flow(const FlowOptions& options, std::ostream& log) {
  if (options.repeat < 1) throw std::invalid_argument("repeat must be >= 1");
  if (options.preset.empty()) {
    std::string method_name = options.method;
    FunctionOptions fn = options.fn;
    if (method_name == "sw" || method_name == "max-sw" || method_name == "max_sw") fn.family = "linear";
    const Method m = parse_method(method_name);
    const FlowMethod method = (m == Method::max_sw || m == Method::max_gsw) ? FlowMethod::max_gsw : FlowMethod::gsw;
    auto run = run_flow_set(options, options.target, fn, method, options.out_dir, log);
    if (options.svg) {
      write_file(options.out_dir / "flow.svg",
                 render_line_chart(std::string(to_string(parse_dataset_kind(options.target.kind))),
                                   "iteration", "log10 W2", {ChartSeries{run.label, run.curve}}));
    }
    return 0;
  }

  if (options.preset != "fig2" && options.preset != "fig5") {
    throw std::invalid_argument("unknown preset '" + options.preset + "' (expected fig2 or fig5)");
  }
  const FlowMethod method = options.preset == "fig2" ? FlowMethod::gsw : FlowMethod::max_gsw;
  const std::vector<std::string> targets{"gaussians25", "gaussians8", "swiss_roll", "half_moons", "circle"};
  const std::vector<FunctionOptions> fns{{"linear", 1, options.fn.radius},
                                         {"circular", 1, options.fn.radius},
                                         {"poly", 3, options.fn.radius},
                                         {"poly", 5, options.fn.radius}};
  FlowOptions preset = options;
  preset.with_oracle = true;
  for (const auto& target : targets) {
    DatasetOptions dst = options.target;
    dst.kind = target;
    std::vector<ChartSeries> series;
    for (const auto& fn : fns) {
      const auto label = fn.to_spec(2).label();
      auto run = run_flow_set(preset, dst, fn, method, options.out_dir / target / label, log);
      series.push_back(ChartSeries{run.label, run.curve});
    }
    write_file(options.out_dir / (target + ".svg"),
               render_line_chart(target, "iteration", "mean log10 W2 to target", series));
  }
  return 0;
}

int cmd_bench(const BenchOptions& options, std::ostream& out) {
  int status = 0;
  if (options.properties) {
    std::vector<PropertyReport> reports;
    const auto d2 = DefiningFunctionSpec::linear(2);
    reports.push_back(check_metric_axioms(Method::sw, d2, options.trials, options.seed));
    reports.push_back(check_metric_axioms(Method::gsw, DefiningFunctionSpec::circular(2), options.trials, options.seed));
    reports.push_back(check_metric_axioms(Method::gsw, DefiningFunctionSpec::polynomial(2, 3), options.trials, options.seed));
    reports.push_back(check_metric_axioms(Method::max_sw, d2, options.trials, options.seed));
    for (const auto& spec : {d2, DefiningFunctionSpec::circular(2), DefiningFunctionSpec::polynomial(2, 3)}) {
      for (auto& r : check_gradients(spec, options.trials, options.seed)) reports.push_back(std::move(r));
    }
    for (auto& r : check_bounds(options.trials, options.seed)) reports.push_back(std::move(r));
    std::string csv = "property,trials,failures,excluded,worst_violation\n";
    for (const auto& r : reports) {
      csv += r.name + "," + std::to_string(r.trials) + "," + std::to_string(r.failures) + "," +
             std::to_string(r.excluded) + "," + format_number(r.worst_violation) + "\n";
      if (!r.passed()) status = 1;
    }
    write_file(options.out_dir / "properties.csv", csv);
    out << csv;
  }

  if (options.sizes.empty() || options.dims.empty() || options.slices.empty() || options.ops.empty()) {
    if (options.properties) return status;
    throw std::invalid_argument("bench sweep is empty");
  }
  for (const auto& op : options.ops) {
    if (op != "gsw" && op != "exact") throw std::invalid_argument("unknown bench op '" + op + "'");
  }
  for (const auto* list : {&options.sizes, &options.dims, &options.slices}) {
    for (const auto v : *list) {
      if (v == 0) throw std::invalid_argument("bench sizes, dims and slices must be positive");
    }
  }
  if (!(options.timeout > 0)) throw std::invalid_argument("bench timeout must be positive");

  using clock = std::chrono::steady_clock;
  std::string csv = "op,N,d,L,seconds\n";
  out << csv;
  for (const auto d : options.dims) {
    bool exact_timed_out = false;
    for (const auto n : options.sizes) {
      DatasetSpec spec;
      spec.n_samples = n;
      spec.dim = d;
      spec.seed = derive_seed(options.seed, 1);
      const PointCloud x = sample(spec);
      spec.seed = derive_seed(options.seed, 2);
      spec.mean.assign(d, 1.0);
      const PointCloud y = sample(spec);
      for (const auto& op : options.ops) {
        if (op == "gsw") {
          for (const auto l : options.slices) {
            const auto t0 = clock::now();
            (void)sw(x, y, 2.0, l, options.seed);
            const double secs = std::chrono::duration<double>(clock::now() - t0).count();
            const auto row = "gsw," + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(l) + "," +
                             format_number(secs) + "\n";
            csv += row;
            out << row;
          }
        } else if (!exact_timed_out) {
          const auto t0 = clock::now();
          (void)exact_wp(x, y, 2.0, OracleOptions{std::max<std::size_t>(n, 2048)});
          const double secs = std::chrono::duration<double>(clock::now() - t0).count();
          const auto row = "exact," + std::to_string(n) + "," + std::to_string(d) + ",0," + format_number(secs) + "\n";
          csv += row;
          out << row;
          if (secs > options.timeout) {
            std::cerr << "exact_wp N=" << n << " took " << secs << " s (timeout " << options.timeout
                      << " s); skipping larger sizes\n";
            exact_timed_out = true;
          }
        }
      }
    }
  }
  write_file(options.out_dir / "bench.csv", csv);
  return status;
}

}  // namespace gsw::cli
