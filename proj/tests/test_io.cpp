#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <random>

#include "dtwmean/io.hpp"

using namespace dtwmean;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("iotest_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("csv series round trip") {
  TempFile f("series.csv", "0,1,0\n0,-1,0\n\n0.5\n");
  const auto series = load_series_csv(f.path);
  REQUIRE(series.size() == 3);
  CHECK(series[0].length() == 3);
  CHECK(series[2].length() == 1);
  CHECK(std::get<double>(series[1].elements[1]) == -1.0);

  save_series_csv("iotest_out.csv", series);
  const auto reloaded = load_series_csv("iotest_out.csv");
  REQUIRE(reloaded.size() == series.size());
  for (std::size_t i = 0; i < series.size(); ++i)
    CHECK(series_equal(series[i], reloaded[i]));
  std::remove("iotest_out.csv");

  TempFile bad("bad.csv", "1,foo\n");
  CHECK_THROWS_AS(load_series_csv(bad.path), std::invalid_argument);
  CHECK_THROWS_AS(load_series_csv("does_not_exist.csv"), std::invalid_argument);
}

TEST_CASE("json series round trip survives random vectors") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> value(-5.0, 5.0);
  const AttributeSpace space = AttributeSpace::vectors(3);
  for (int it = 0; it < 50; ++it) {
    std::vector<std::vector<double>> rows(1 + rng() % 5);
    for (auto& row : rows) {
      row.resize(3);
      for (auto& v : row) v = value(rng);
    }
    const TimeSeries x = TimeSeries::of_vectors(rows);
    const TimeSeries back = series_from_json(space, series_to_json(space, x));
    REQUIRE(series_equal(x, back));
  }
}

TEST_CASE("symbolic series document") {
  TempFile f("symbols.json",
             R"({"alphabet":["a","b"],"series":[["a","b"],["b"]]})");
  const SeriesFile file = load_series_json(f.path);
  CHECK(file.space.kind == AttrKind::Symbol);
  REQUIRE(file.series.size() == 2);
  CHECK(std::get<Symbol>(file.series[0].elements[1]).id == 1);

  TempFile bad("symbols_bad.json",
               R"({"alphabet":["a","b"],"series":[["c"]]})");
  CHECK_THROWS_AS(load_series_json(bad.path), std::invalid_argument);
}

TEST_CASE("multivariate series document") {
  TempFile f("vec.json", R"({"dim":2,"series":[[[0,0],[1,1]],[[2,2]]]})");
  const SeriesFile file = load_series_json(f.path);
  CHECK(file.space.kind == AttrKind::Vector);
  CHECK(file.space.dim == 2);
  CHECK(std::get<std::vector<double>>(file.series[0].elements[1]) ==
        std::vector<double>{1.0, 1.0});
}

TEST_CASE("space configuration") {
  TempFile f("space.json",
             R"({"local":"squared-euclidean","transform":"square-root",
                 "losses":[{"w":1,"p":2},{"w":0.5,"p":1}]})");
  const SpaceConfig config = load_space_config(f.path);
  CHECK(config.local.kind == LocalDistance::Kind::SquaredEuclidean);
  CHECK(config.transform.kind == MonotoneTransform::Kind::SquareRoot);
  REQUIRE(config.losses.size() == 2);
  CHECK(config.losses[1].weight == 0.5);

  const DtwSpace space = assemble_space(config, AttributeSpace::real());
  CHECK(space.attributes.kind == AttrKind::Real);
  CHECK_THROWS_AS(assemble_space(config, AttributeSpace::symbolic({"a"})),
                  std::invalid_argument);

  CHECK(losses_for_sample(config, 2).size() == 2);
  CHECK_THROWS_AS(losses_for_sample(config, 3), std::invalid_argument);

  TempFile table("table.json",
                 R"({"local":{"kind":"discrete-table","alphabet":["a","b"],
                     "table":[[0,1],[1,0]]},"transform":"identity",
                     "losses":[{"w":1,"p":1}]})");
  const SpaceConfig sym = load_space_config(table.path);
  CHECK(sym.alphabet == std::vector<std::string>{"a", "b"});
  const DtwSpace sym_space =
      assemble_space(sym, AttributeSpace::symbolic({"a", "b"}));
  CHECK(sym_space.local.kind == LocalDistance::Kind::DiscreteTable);
  CHECK_THROWS_AS(assemble_space(sym, AttributeSpace::symbolic({"x", "y"})),
                  std::invalid_argument);

  TempFile norm("norm.json", R"({"local":{"kind":"norm-induced","p":1.5}})");
  CHECK(load_space_config(norm.path).local.norm_exponent == 1.5);
  TempFile unknown("unknown.json", R"({"local":"chebyshev"})");
  CHECK_THROWS_AS(load_space_config(unknown.path), std::invalid_argument);
}

TEST_CASE("caps document") {
  TempFile f("caps.json", R"({"max_m":5,"max_configurations":100})");
  const SolverCaps caps = load_caps(f.path);
  CHECK(caps.max_m == 5);
  CHECK(caps.max_configurations == 100);
  CHECK(caps.max_n == SolverCaps{}.max_n);

  TempFile bad("caps_bad.json", R"({"max_m":0})");
  CHECK_THROWS_AS(load_caps(bad.path), std::invalid_argument);
}

TEST_CASE("graph json round trip") {
  const WarpingGraph g{3, 2, {{1, 1}, {2, 1}, {3, 2}}};
  const ordered_json doc = graph_to_json(g);
  CHECK(doc["m"] == 3);
  CHECK(doc["edges"].size() == 3);
  CHECK(graph_from_json(doc) == g);

  std::mt19937_64 rng(37);
  for (int it = 0; it < 100; ++it) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto paths = enumerate_warping_paths(m, n);
    const WarpingGraph random_graph = path_to_graph(paths[rng() % paths.size()]);
    REQUIRE(graph_from_json(graph_to_json(random_graph)) == random_graph);
  }
}

TEST_CASE("double formatting round trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(7.0 / 12.0) == format_double(7.0 / 12.0));
  CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
}
