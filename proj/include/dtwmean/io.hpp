#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dtwmean/core.hpp"
#include "dtwmean/solver.hpp"
#include "dtwmean/wgraph.hpp"

namespace dtwmean {

using ordered_json = nlohmann::ordered_json;

/// Series together with the attribute space the file declares or implies.
struct SeriesFile {
  AttributeSpace space;
  std::vector<TimeSeries> series;
};

// CSV: one univariate series per row, numeric cells, ragged rows allowed.
std::vector<TimeSeries> load_series_csv(const std::string& path);
void save_series_csv(const std::string& path, const std::vector<TimeSeries>& series);

// JSON: {"series": [[..],[..]], "dim": d} for real/vector data or
// {"alphabet": [...], "series": [["a","b"],...]} for symbolic data.
SeriesFile load_series_json(const std::string& path);
SeriesFile parse_series_json(const ordered_json& doc);

// Dispatch on the file extension: .csv implies real scalars.
SeriesFile load_series_file(const std::string& path);

/// Space and loss configuration:
/// {"local": ..., "transform": ..., "losses": [{"w":..., "p":...}, ...]}.
/// "local" is "squared-euclidean", "xor-zero",
/// {"kind":"norm-induced","p":...} or
/// {"kind":"discrete-table","alphabet":[...],"table":[[...]]}.
struct SpaceConfig {
  LocalDistance local = LocalDistance::squared_euclidean();
  MonotoneTransform transform = MonotoneTransform::square_root();
  std::vector<LossFunction> losses;
  std::vector<std::string> alphabet;  // set with discrete-table locals
};

SpaceConfig load_space_config(const std::string& path);
SpaceConfig parse_space_config(const ordered_json& doc);

/// Combines a space configuration with the attribute space of a data file.
/// Discrete-table configurations carry their own alphabet, which must match
/// the data file's; the attribute space comes from the data otherwise.
DtwSpace assemble_space(const SpaceConfig& config, const AttributeSpace& data_space);

/// Broadcasts a single configured loss over N series, or checks the count.
std::vector<LossFunction> losses_for_sample(const SpaceConfig& config, int n_series);

SolverCaps load_caps(const std::string& path);
SolverCaps parse_caps(const ordered_json& doc);

ordered_json attribute_to_json(const AttributeSpace& space, const Attribute& a);
ordered_json series_to_json(const AttributeSpace& space, const TimeSeries& x);
TimeSeries series_from_json(const AttributeSpace& space, const ordered_json& doc);

ordered_json path_to_json(const WarpingPath& p);
ordered_json graph_to_json(const WarpingGraph& g);
WarpingGraph graph_from_json(const ordered_json& doc);
WarpingGraph load_graph_json(const std::string& path);

/// Shortest round-trip decimal rendering, byte-stable across runs.
std::string format_double(double v);

ordered_json read_json_file(const std::string& path);

}  // namespace dtwmean
