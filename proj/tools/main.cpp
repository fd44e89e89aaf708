// Command-line surface: DTW distances, reduction bounds, exact means,
// variance curves, the shortening procedure and the verification suite, with
// CSV/JSON input and byte-stable output.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtwmean/frechet.hpp"
#include "dtwmean/glue.hpp"
#include "dtwmean/io.hpp"
#include "dtwmean/reduce.hpp"
#include "dtwmean/solver.hpp"
#include "dtwmean/verify.hpp"

namespace {

using dtwmean::ordered_json;

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct MeanOptions {
  std::string space_path;
  std::string sample_path;
  std::string caps_path;
  int restrict_m = 0;
  bool unrestricted = false;
  std::string approx_grid;  // "lo:hi:step", opt-in approximate fallback
};

dtwmean::SolverCaps caps_or_default(const std::string& path) {
  return path.empty() ? dtwmean::SolverCaps{} : dtwmean::load_caps(path);
}

dtwmean::FrechetProblem assemble_problem(const std::string& space_path,
                                         const dtwmean::SeriesFile& data) {
  const auto config = dtwmean::load_space_config(space_path);
  dtwmean::FrechetProblem p;
  p.space = dtwmean::assemble_space(config, data.space);
  p.sample = data.series;
  p.losses = dtwmean::losses_for_sample(config, static_cast<int>(data.series.size()));
  return p;
}

ordered_json glued_to_json(const dtwmean::GluedGraph& g) {
  ordered_json doc;
  doc["splice_size"] = g.splice_size;
  ordered_json particles = ordered_json::array();
  for (const auto& particle : g.particles)
    particles.push_back(dtwmean::graph_to_json(particle));
  doc["particles"] = particles;
  return doc;
}

int cmd_dtw(const std::string& space_path, const std::string& a_path,
            const std::string& b_path, bool with_path) {
  const auto config = dtwmean::load_space_config(space_path);
  const auto a = dtwmean::load_series_file(a_path);
  const auto b = dtwmean::load_series_file(b_path);
  if (!a.space.same_as(b.space))
    throw std::invalid_argument("the two series files use different attribute spaces");
  const dtwmean::DtwSpace space = dtwmean::assemble_space(config, a.space);

  const auto result = dtwmean::dtw_distance(space, a.series.front(), b.series.front());
  ordered_json out;
  out["distance"] = result.distance;
  out["raw_cost"] = result.raw_cost;
  if (with_path) out["path"] = dtwmean::path_to_json(result.path);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_bound(const std::string& sample_path) {
  const auto data = dtwmean::load_series_file(sample_path);
  std::vector<int> lengths;
  long long simple = 0;
  for (const auto& s : data.series) {
    lengths.push_back(s.length());
    simple += s.length();
  }
  simple -= 2 * (static_cast<long long>(lengths.size()) - 1);
  const auto report = dtwmean::reduction_bound_sample(lengths);

  ordered_json out;
  out["rho"] = report.rho;
  out["core"] = report.core;
  out["trivial_count"] = report.trivial_count;
  out["simple_formula"] = simple;
  out["matches_simple_formula"] = simple == report.rho;
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_mean(const MeanOptions& opt) {
  const auto data = dtwmean::load_series_file(opt.sample_path);
  const auto problem = assemble_problem(opt.space_path, data);
  const auto caps = caps_or_default(opt.caps_path);

  dtwmean::MeanResult result;
  if (!opt.approx_grid.empty()) {
    if (opt.restrict_m < 1)
      throw std::invalid_argument("--approx-grid needs --restrict M");
    double lo = 0;
    double hi = 0;
    double step = 0;
    if (std::sscanf(opt.approx_grid.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 ||
        step <= 0 || hi < lo)
      throw std::invalid_argument("--approx-grid expects lo:hi:step");
    std::vector<double> values;
    for (double v = lo; v <= hi + step / 2; v += step) values.push_back(v);
    result = dtwmean::restricted_mean_grid(problem, opt.restrict_m, values, caps);
  } else if (opt.unrestricted) {
    result = dtwmean::unrestricted_mean(problem, caps);
  } else if (opt.restrict_m >= 1) {
    result = dtwmean::restricted_mean(problem, opt.restrict_m, caps);
  } else {
    throw std::invalid_argument("choose --restrict M or --unrestricted");
  }

  ordered_json out;
  out["minimizer"] = dtwmean::series_to_json(problem.space.attributes, result.minimizer);
  out["value"] = result.value;
  out["m"] = result.length;
  out["method"] = dtwmean::mean_method_name(result.method);
  out["configurations"] = result.configurations;
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_variance_curve(const std::string& space_path, const std::string& sample_path,
                       int max_m, const std::string& caps_path, const std::string& format) {
  const auto data = dtwmean::load_series_file(sample_path);
  const auto problem = assemble_problem(space_path, data);
  const auto curve = dtwmean::variance_curve(problem, max_m, caps_or_default(caps_path));

  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < curve.f_star.size(); ++i) {
      ordered_json row;
      row["m"] = i + 1;
      row["F_m_star"] = curve.f_star[i];
      row["v_m"] = curve.running_min[i];
      row["argmin"] = dtwmean::series_to_json(problem.space.attributes, curve.argmin[i]);
      rows.push_back(row);
    }
    std::cout << ordered_json{{"curve", rows}}.dump() << "\n";
    return 0;
  }

  std::cout << "m,F_m_star,v_m,argmin_candidate\n";
  for (std::size_t i = 0; i < curve.f_star.size(); ++i) {
    const auto argmin =
        dtwmean::series_to_json(problem.space.attributes, curve.argmin[i]).dump();
    std::cout << i + 1 << "," << dtwmean::format_double(curve.f_star[i]) << ","
              << dtwmean::format_double(curve.running_min[i]) << "," << csv_quote(argmin)
              << "\n";
  }
  return 0;
}

int cmd_reduce(const std::string& space_path, const std::string& candidate_path,
               const std::string& sample_path, double tolerance) {
  const auto data = dtwmean::load_series_file(sample_path);
  const auto problem = assemble_problem(space_path, data);
  const auto candidate_file = dtwmean::load_series_file(candidate_path);
  if (!candidate_file.space.same_as(data.space))
    throw std::invalid_argument("candidate and sample use different attribute spaces");
  const dtwmean::TimeSeries candidate = candidate_file.series.front();

  const auto [final_series, steps] = dtwmean::reduce_to_bound(problem, candidate, tolerance);

  ordered_json out;
  out["initial"] = dtwmean::series_to_json(problem.space.attributes, candidate);
  out["rho"] = dtwmean::reduction_bound_sample(problem.lengths()).rho;
  ordered_json step_rows = ordered_json::array();
  ordered_json trajectory = ordered_json::array();
  if (!steps.empty()) trajectory.push_back(steps.front().f_before);
  for (const auto& step : steps) {
    ordered_json row;
    row["removed_index"] = step.removed_index;
    row["f_before"] = step.f_before;
    row["f_after"] = step.f_after;
    row["glued"] = glued_to_json(step.glued);
    ordered_json paths = ordered_json::array();
    for (const auto& p : step.particle_paths) paths.push_back(dtwmean::path_to_json(p));
    row["paths"] = paths;
    step_rows.push_back(row);
    trajectory.push_back(step.f_after);
  }
  out["steps"] = step_rows;
  out["f_trajectory"] = trajectory;
  out["final"] = dtwmean::series_to_json(problem.space.attributes, final_series);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_demo_nonexistence(int steps, const std::vector<long long>& denominators,
                          const std::string& format) {
  dtwmean::DemoGrid grid;
  if (!denominators.empty()) grid.denominators = denominators;
  const auto report = dtwmean::nonexistence_demo(steps, grid);

  ordered_json summary;
  summary["best_family"] = report.best_family;
  summary["strictly_decreasing"] = report.best_family_strictly_decreasing;
  summary["family_infimum"] = report.family_infimum;
  summary["grid_minimum"] = report.grid_minimum;
  summary["grid_minimizer"] =
      dtwmean::series_to_json(dtwmean::AttributeSpace::real(), report.grid_minimizer);
  summary["grid_candidates"] = report.grid_candidates;
  summary["empirical_infimum"] = report.empirical_infimum;
  summary["attained_on_grid"] = report.attained_on_grid;

  if (format == "json") {
    ordered_json out;
    ordered_json rows = ordered_json::array();
    for (const auto& s : report.family_len1)
      rows.push_back({{"family", "(t)"}, {"t", s.t}, {"F", s.value}});
    for (const auto& s : report.family_len2)
      rows.push_back({{"family", "(1,t)"}, {"t", s.t}, {"F", s.value}});
    out["families"] = rows;
    out["summary"] = summary;
    std::cout << out.dump() << "\n";
    return 0;
  }

  std::cout << "family,t,F\n";
  for (const auto& s : report.family_len1)
    std::cout << "(t)," << dtwmean::format_double(s.t) << ","
              << dtwmean::format_double(s.value) << "\n";
  for (const auto& s : report.family_len2)
    std::cout << "\"(1,t)\"," << dtwmean::format_double(s.t) << ","
              << dtwmean::format_double(s.value) << "\n";
  std::cerr << summary.dump() << "\n";
  return 0;
}

int cmd_wgraph_check(const std::string& graph_path) {
  const auto graph = dtwmean::load_graph_json(graph_path);
  const auto why = dtwmean::warping_graph_violation(graph);
  ordered_json out;
  out["valid"] = !why.has_value();
  out["violation"] = why ? ordered_json(*why) : ordered_json(nullptr);
  out["compact"] = why ? ordered_json(nullptr) : ordered_json(dtwmean::is_compact(graph));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_wgraph_compactify(const std::string& graph_path) {
  const auto graph = dtwmean::load_graph_json(graph_path);
  std::cout << dtwmean::graph_to_json(dtwmean::compactify(graph)).dump() << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed) {
  const auto results = dtwmean::verify::run_all_checks(seed);
  int failures = 0;
  for (const auto& r : results) {
    if (r.passed) {
      std::cout << "ok " << r.name << " (" << r.cases << " cases)\n";
    } else {
      ++failures;
      std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
    }
  }
  std::cout << (failures == 0 ? "verify: all checks passed" : "verify: checks failed")
            << " (" << results.size() - failures << "/" << results.size() << ")\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sample means, reduction bounds and warping-graph tools for DTW spaces"};
  app.require_subcommand(1);

  std::string space_path;
  std::string a_path;
  std::string b_path;
  bool with_path = false;
  auto* dtw = app.add_subcommand("dtw", "DTW distance between two series");
  dtw->add_option("--space", space_path, "space configuration JSON")->required();
  dtw->add_option("a", a_path, "first series file")->required();
  dtw->add_option("b", b_path, "second series file")->required();
  dtw->add_flag("--path", with_path, "include the optimal warping path");

  std::string bound_sample;
  auto* bound = app.add_subcommand("bound", "reduction bound of a sample");
  bound->add_option("sample", bound_sample, "sample file")->required();

  MeanOptions mean_opt;
  auto* mean = app.add_subcommand("mean", "exact restricted or unrestricted sample mean");
  mean->add_option("--space", mean_opt.space_path, "space configuration JSON")->required();
  mean->add_option("sample", mean_opt.sample_path, "sample file")->required();
  mean->add_option("--caps", mean_opt.caps_path, "solver caps JSON");
  mean->add_option("--restrict", mean_opt.restrict_m, "candidate length m");
  mean->add_flag("--unrestricted", mean_opt.unrestricted, "sweep lengths up to the reduction bound");
  mean->add_option("--approx-grid", mean_opt.approx_grid,
                   "lo:hi:step coordinate grid; approximate fallback, no certificate");

  std::string curve_space;
  std::string curve_sample;
  std::string curve_caps;
  std::string curve_format = "csv";
  int max_m = 0;
  auto* curve = app.add_subcommand("variance-curve", "restricted variances for m = 1..max-m");
  curve->add_option("--space", curve_space, "space configuration JSON")->required();
  curve->add_option("sample", curve_sample, "sample file")->required();
  curve->add_option("--max-m", max_m, "largest candidate length")->required();
  curve->add_option("--caps", curve_caps, "solver caps JSON");
  curve->add_option("--format", curve_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string reduce_space;
  std::string reduce_candidate;
  std::string reduce_sample;
  double tolerance = 1e-9;
  auto* reduce = app.add_subcommand("reduce", "shorten a candidate without increasing F");
  reduce->add_option("--space", reduce_space, "space configuration JSON")->required();
  reduce->add_option("--candidate", reduce_candidate, "candidate series file")->required();
  reduce->add_option("sample", reduce_sample, "sample file")->required();
  reduce->add_option("--tolerance", tolerance, "slack for the F monotonicity guard");

  int demo_steps = 100;
  std::vector<long long> demo_denominators;
  std::string demo_format = "csv";
  auto* demo = app.add_subcommand("demo-nonexistence",
                                  "probe the infimum of the gap-penalty fixture");
  demo->add_option("--steps", demo_steps, "family parameter steps from 1 down to 0");
  demo->add_option("--grid-denominators", demo_denominators,
                   "per-length grid denominators, values k/D over [-1,1]");
  demo->add_option("--format", demo_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string graph_path_check;
  std::string graph_path_compactify;
  auto* wgraph = app.add_subcommand("wgraph", "warping graph utilities");
  wgraph->require_subcommand(1);
  auto* wcheck = wgraph->add_subcommand("check", "validate a graph JSON file");
  wcheck->add_option("graph", graph_path_check, "graph JSON file")->required();
  auto* wcompact = wgraph->add_subcommand("compactify", "compactify a graph JSON file");
  wcompact->add_option("graph", graph_path_compactify, "graph JSON file")->required();

  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run the full invariant suite");
  verify->add_option("--seed", seed, "seed for the randomized sweeps");

  try {
    app.parse(argc, argv);

    if (*dtw) return cmd_dtw(space_path, a_path, b_path, with_path);
    if (*bound) return cmd_bound(bound_sample);
    if (*mean) return cmd_mean(mean_opt);
    if (*curve) return cmd_variance_curve(curve_space, curve_sample, max_m, curve_caps, curve_format);
    if (*reduce) return cmd_reduce(reduce_space, reduce_candidate, reduce_sample, tolerance);
    if (*demo) return cmd_demo_nonexistence(demo_steps, demo_denominators, demo_format);
    if (*wcheck) return cmd_wgraph_check(graph_path_check);
    if (*wcompact) return cmd_wgraph_compactify(graph_path_compactify);
    if (*verify) return cmd_verify(seed);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  }
}
