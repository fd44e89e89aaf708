#include "dtwmean/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dtwmean {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_cell(const std::string& cell, const std::string& path) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(path + ": cannot parse numeric cell '" + cell + "'");
  }
}

}  // namespace

std::vector<TimeSeries> load_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<TimeSeries> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string row = trim(line);
    if (row.empty()) continue;
    std::vector<double> values;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) values.push_back(parse_cell(trim(cell), path));
    if (values.empty()) continue;
    out.push_back(TimeSeries::of_reals(std::move(values)));
  }
  if (out.empty()) throw std::invalid_argument(path + ": no series found");
  return out;
}

void save_series_csv(const std::string& path, const std::vector<TimeSeries>& series) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  for (const auto& s : series) {
    for (int i = 0; i < s.length(); ++i) {
      if (i) out << ",";
      out << format_double(std::get<double>(s.elements[i]));
    }
    out << "\n";
  }
}

SeriesFile parse_series_json(const ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("series"))
    throw std::invalid_argument("series document needs a 'series' array");
  SeriesFile file;

  if (doc.contains("alphabet")) {
    std::vector<std::string> alphabet = doc.at("alphabet").get<std::vector<std::string>>();
    file.space = AttributeSpace::symbolic(std::move(alphabet));
    for (const auto& row : doc.at("series")) {
      std::vector<int> ids;
      for (const auto& cell : row) {
        const int id = file.space.symbol_index(cell.get<std::string>());
        if (id < 0)
          throw std::invalid_argument("symbol not in alphabet: " + cell.get<std::string>());
        ids.push_back(id);
      }
      file.series.push_back(TimeSeries::of_symbols(std::move(ids)));
    }
  } else {
    const int dim = doc.value("dim", 1);
    file.space = dim == 1 ? AttributeSpace::real() : AttributeSpace::vectors(dim);
    for (const auto& row : doc.at("series")) {
      if (dim == 1) {
        std::vector<double> values;
        for (const auto& cell : row) values.push_back(cell.get<double>());
        file.series.push_back(TimeSeries::of_reals(std::move(values)));
      } else {
        std::vector<std::vector<double>> values;
        for (const auto& cell : row) values.push_back(cell.get<std::vector<double>>());
        file.series.push_back(TimeSeries::of_vectors(std::move(values)));
      }
    }
  }
  if (file.series.empty()) throw std::invalid_argument("series document holds no series");
  return file;
}

SeriesFile load_series_json(const std::string& path) {
  return parse_series_json(read_json_file(path));
}

SeriesFile load_series_file(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return {AttributeSpace::real(), load_series_csv(path)};
  return load_series_json(path);
}

SpaceConfig parse_space_config(const ordered_json& doc) {
  SpaceConfig config;

  if (doc.contains("local")) {
    const auto& local = doc.at("local");
    const std::string kind = local.is_string() ? local.get<std::string>()
                                               : local.at("kind").get<std::string>();
    if (kind == "squared-euclidean") {
      config.local = LocalDistance::squared_euclidean();
    } else if (kind == "xor-zero") {
      config.local = LocalDistance::xor_zero();
    } else if (kind == "norm-induced") {
      config.local = LocalDistance::norm_induced(local.at("p").get<double>());
    } else if (kind == "discrete-table") {
      config.alphabet = local.at("alphabet").get<std::vector<std::string>>();
      config.local = LocalDistance::discrete_table(
          local.at("table").get<std::vector<std::vector<double>>>());
      if (config.local.table.size() != config.alphabet.size())
        throw std::invalid_argument("distance table size must match alphabet size");
    } else {
      throw std::invalid_argument("unknown local distance kind: " + kind);
    }
  }

  if (doc.contains("transform")) {
    const std::string t = doc.at("transform").get<std::string>();
    if (t == "identity") {
      config.transform = MonotoneTransform::identity();
    } else if (t == "square-root" || t == "sqrt") {
      config.transform = MonotoneTransform::square_root();
    } else {
      throw std::invalid_argument("unknown transform: " + t);
    }
  }

  if (doc.contains("losses")) {
    for (const auto& item : doc.at("losses"))
      config.losses.push_back(power_loss(item.value("w", 1.0), item.value("p", 2.0)));
  }
  return config;
}

SpaceConfig load_space_config(const std::string& path) {
  return parse_space_config(read_json_file(path));
}

DtwSpace assemble_space(const SpaceConfig& config, const AttributeSpace& data_space) {
  DtwSpace space;
  space.local = config.local;
  space.transform = config.transform;
  if (config.local.kind == LocalDistance::Kind::DiscreteTable) {
    if (data_space.kind != AttrKind::Symbol)
      throw std::invalid_argument("discrete-table space needs symbolic data");
    if (data_space.alphabet != config.alphabet)
      throw std::invalid_argument("data alphabet differs from the configured alphabet");
    space.attributes = data_space;
  } else {
    if (data_space.kind == AttrKind::Symbol)
      throw std::invalid_argument("symbolic data needs a discrete-table space configuration");
    space.attributes = data_space;
  }
  return space;
}

std::vector<LossFunction> losses_for_sample(const SpaceConfig& config, int n_series) {
  if (config.losses.empty())
    return std::vector<LossFunction>(static_cast<std::size_t>(n_series), power_loss(1.0, 2.0));
  if (config.losses.size() == 1)
    return std::vector<LossFunction>(static_cast<std::size_t>(n_series), config.losses.front());
  if (static_cast<int>(config.losses.size()) != n_series) {
    std::ostringstream msg;
    msg << "configured " << config.losses.size() << " losses for " << n_series
        << " series";
    throw std::invalid_argument(msg.str());
  }
  return config.losses;
}

SolverCaps parse_caps(const ordered_json& doc) {
  SolverCaps caps;
  caps.max_m = doc.value("max_m", caps.max_m);
  caps.max_n = doc.value("max_n", caps.max_n);
  caps.max_sample = doc.value("max_N", caps.max_sample);
  caps.max_configurations = doc.value("max_configurations", caps.max_configurations);
  caps.alphabet_max_candidates =
      doc.value("alphabet_max_candidates", caps.alphabet_max_candidates);
  caps.validate();
  return caps;
}

SolverCaps load_caps(const std::string& path) { return parse_caps(read_json_file(path)); }

ordered_json attribute_to_json(const AttributeSpace& space, const Attribute& a) {
  switch (space.kind) {
    case AttrKind::Real: return std::get<double>(a);
    case AttrKind::Vector: return std::get<std::vector<double>>(a);
    case AttrKind::Symbol: return space.alphabet[std::get<Symbol>(a).id];
  }
  throw std::logic_error("unreachable attribute kind");
}

ordered_json series_to_json(const AttributeSpace& space, const TimeSeries& x) {
  ordered_json arr = ordered_json::array();
  for (const auto& a : x.elements) arr.push_back(attribute_to_json(space, a));
  return arr;
}

TimeSeries series_from_json(const AttributeSpace& space, const ordered_json& doc) {
  TimeSeries x;
  for (const auto& cell : doc) {
    switch (space.kind) {
      case AttrKind::Real:
        x.elements.emplace_back(cell.get<double>());
        break;
      case AttrKind::Vector:
        x.elements.emplace_back(cell.get<std::vector<double>>());
        break;
      case AttrKind::Symbol: {
        const int id = space.symbol_index(cell.get<std::string>());
        if (id < 0) throw std::invalid_argument("symbol not in alphabet: " + cell.get<std::string>());
        x.elements.emplace_back(Symbol{id});
        break;
      }
    }
  }
  return x;
}

ordered_json path_to_json(const WarpingPath& p) {
  ordered_json points = ordered_json::array();
  for (const auto& pt : p.points) points.push_back({pt.i, pt.j});
  return points;
}

ordered_json graph_to_json(const WarpingGraph& g) {
  ordered_json doc;
  doc["m"] = g.m;
  doc["n"] = g.n;
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges) edges.push_back({e.v, e.w});
  doc["edges"] = edges;
  return doc;
}

WarpingGraph graph_from_json(const ordered_json& doc) {
  WarpingGraph g;
  g.m = doc.at("m").get<int>();
  g.n = doc.at("n").get<int>();
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph edges must be [v, w] pairs");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return g;
}

WarpingGraph load_graph_json(const std::string& path) {
  return graph_from_json(read_json_file(path));
}

std::string format_double(double v) { return ordered_json(v).dump(); }

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace dtwmean
