#include <doctest.h>

#include <stdexcept>

#include <set>

#include "dtwmean/wgraph.hpp"

using namespace dtwmean;

namespace {

WarpingGraph graph(int m, int n, std::vector<GraphEdge> edges) {
  return WarpingGraph{m, n, std::move(edges)};
}

// Definition-level oracle: some single edge is removable.
bool any_edge_removable(const WarpingGraph& g) {
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    WarpingGraph trimmed = g;
    trimmed.edges.erase(trimmed.edges.begin() + static_cast<std::ptrdiff_t>(k));
    if (!trimmed.edges.empty() && !warping_graph_violation(trimmed)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("path/graph conversions") {
  const WarpingPath tiny{1, 1, {{1, 1}}};
  const WarpingGraph g = path_to_graph(tiny);
  CHECK(g.m == 1);
  CHECK(g.n == 1);
  CHECK(g.edges == std::vector<GraphEdge>{{1, 1}});

  const WarpingPath diag{2, 2, {{1, 1}, {2, 2}}};
  CHECK(path_to_graph(diag).edges.size() == 2);

  for (const auto& p : enumerate_warping_paths(4, 4))
    CHECK(graph_to_path(path_to_graph(p)) == p);

  CHECK_THROWS_AS(path_to_graph(WarpingPath{2, 2, {{1, 1}}}), std::invalid_argument);
}

TEST_CASE("compactness characterization") {
  CHECK(is_compact(graph(2, 2, {{1, 1}, {2, 2}})));
  CHECK(!is_compact(graph(2, 2, {{1, 1}, {1, 2}, {2, 2}})));

  // Characterization equals the deletion oracle on all graphs of order 3x3.
  for (const auto& p : enumerate_warping_paths(3, 3)) {
    const WarpingGraph g = path_to_graph(p);
    CHECK(is_compact(g) == !any_edge_removable(g));
  }
}

TEST_CASE("compactify") {
  const WarpingGraph already = graph(2, 2, {{1, 1}, {2, 2}});
  CHECK(compactify(already) == already);

  const WarpingGraph detour = graph(2, 2, {{1, 1}, {1, 2}, {2, 2}});
  CHECK(compactify(detour) == already);

  for (const auto& p : enumerate_warping_paths(4, 3)) {
    const WarpingGraph g = compactify(path_to_graph(p));
    CHECK(is_compact(g));
    CHECK(compactify(g) == g);
  }
}

TEST_CASE("star components") {
  const WarpingGraph diag = graph(3, 3, {{1, 1}, {2, 2}, {3, 3}});
  const auto stars = star_components(diag);
  REQUIRE(stars.size() == 3);
  for (const auto& s : stars) {
    CHECK(s.v_count() == 1);
    CHECK(s.w_count() == 1);
  }

  const WarpingGraph column = graph(3, 1, {{1, 1}, {2, 1}, {3, 1}});
  const auto col_stars = star_components(column);
  REQUIRE(col_stars.size() == 1);
  CHECK(col_stars[0].form == StarComponent::Form::KR1);
  CHECK(col_stars[0].center == NodeRef{Partition::W, 1});
  CHECK(col_stars[0].v_count() == 3);

  CHECK_THROWS_AS(star_components(graph(2, 2, {{1, 1}, {1, 2}, {2, 2}})),
                  std::invalid_argument);
}

TEST_CASE("neighborhoods") {
  const WarpingGraph fan = graph(1, 3, {{1, 1}, {1, 2}, {1, 3}});
  CHECK(neighborhood(fan, Partition::V, 1) == std::vector<int>{1, 2, 3});
  CHECK(neighborhood(fan, Partition::W, 2) == std::vector<int>{1});

  const WarpingGraph diag = graph(3, 3, {{1, 1}, {2, 2}, {3, 3}});
  CHECK(neighborhood(diag, Partition::V, 2) == std::vector<int>{2});
  CHECK_THROWS_AS(neighborhood(diag, Partition::V, 4), std::invalid_argument);

  // Contiguity plus inner-degree-one over every graph of order 4x4.
  for (const auto& p : enumerate_warping_paths(4, 4)) {
    const WarpingGraph g = path_to_graph(p);
    for (auto part : {Partition::V, Partition::W}) {
      const int count = part == Partition::V ? g.m : g.n;
      const auto other = part == Partition::V ? Partition::W : Partition::V;
      for (int node = 1; node <= count; ++node) {
        const auto nbrs = neighborhood(g, part, node);
        REQUIRE(!nbrs.empty());
        REQUIRE(nbrs.back() - nbrs.front() + 1 == static_cast<int>(nbrs.size()));
        for (std::size_t t = 1; t + 1 < nbrs.size(); ++t)
          REQUIRE(neighborhood(g, other, nbrs[t]).size() == 1);
      }
    }
  }
}

TEST_CASE("redundant nodes") {
  const WarpingGraph diag = graph(3, 3, {{1, 1}, {2, 2}, {3, 3}});
  CHECK(redundant_nodes(diag, Partition::V).empty());

  // In K_{3,1} the single second-partition node has degree 3, so every
  // first-partition node is redundant.
  const WarpingGraph column = graph(3, 1, {{1, 1}, {2, 1}, {3, 1}});
  CHECK(redundant_nodes(column, Partition::V) == std::vector<int>{1, 2, 3});
  CHECK(redundant_nodes(column, Partition::W).empty());

  CHECK_THROWS_AS(redundant_nodes(graph(2, 2, {{1, 1}, {1, 2}, {2, 2}}), Partition::V),
                  std::invalid_argument);
}

TEST_CASE("delete node") {
  const WarpingGraph pair = graph(2, 1, {{1, 1}, {2, 1}});
  const WarpingGraph reduced = delete_node(pair, 2);
  CHECK(reduced == graph(1, 1, {{1, 1}}));

  const WarpingGraph column = graph(3, 1, {{1, 1}, {2, 1}, {3, 1}});
  const WarpingGraph two = delete_node(column, 2);
  CHECK(two == graph(2, 1, {{1, 1}, {2, 1}}));
  CHECK(delete_node(column, 1) == graph(2, 1, {{1, 1}, {2, 1}}));

  const WarpingGraph diag = graph(2, 2, {{1, 1}, {2, 2}});
  CHECK_THROWS_AS(delete_node(diag, 1), std::invalid_argument);

  // Every reported redundant node deletes into a compact warping graph,
  // exhaustively over the compact graphs of order 5x4.
  for (const auto& p : enumerate_warping_paths(5, 4)) {
    const WarpingGraph g = path_to_graph(p);
    if (!is_compact(g)) continue;
    for (int node : redundant_nodes(g, Partition::V)) {
      const WarpingGraph smaller = delete_node(g, node);
      CHECK(warping_graph_violation(smaller) == std::nullopt);
      CHECK(is_compact(smaller));
      CHECK(smaller.m == g.m - 1);
    }
  }
}

TEST_CASE("star census for wide compact graphs") {
  for (const auto& p : enumerate_warping_paths(5, 3)) {
    const WarpingGraph g = compactify(path_to_graph(p));
    const auto stars = star_components(g);
    int k11 = 0;
    bool wide = false;
    for (const auto& s : stars) {
      CHECK(s.v_count() >= 1);
      CHECK(s.w_count() >= 1);
      if (s.v_count() == 1 && s.w_count() == 1) ++k11;
      if (s.v_count() > 1) wide = true;
    }
    CHECK(k11 <= g.n - 1);
    CHECK(wide);
  }
}
