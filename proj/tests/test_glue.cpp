#include <doctest.h>

#include <stdexcept>

#include <random>

#include "dtwmean/glue.hpp"

using namespace dtwmean;

namespace {

WarpingGraph column(int m) {
  WarpingGraph g{m, 1, {}};
  for (int v = 1; v <= m; ++v) g.edges.push_back({v, 1});
  return g;
}

WarpingGraph diagonal(int m) {
  WarpingGraph g{m, m, {}};
  for (int v = 1; v <= m; ++v) g.edges.push_back({v, v});
  return g;
}

}  // namespace

TEST_CASE("reduction bound from sample lengths") {
  CHECK(reduction_bound_sample({4, 4}).rho == 6);
  CHECK(reduction_bound_sample({3, 3}).rho == 4);
  CHECK(reduction_bound_sample({1, 1, 1}).rho == 1);

  const auto mixed = reduction_bound_sample({1, 3});
  CHECK(mixed.rho == 3);
  CHECK(mixed.core == std::vector<int>{2});
  CHECK(mixed.trivial_count == 1);

  CHECK_THROWS_AS(reduction_bound_sample({}), std::invalid_argument);
  CHECK_THROWS_AS(reduction_bound_sample({0, 2}), std::invalid_argument);
}

TEST_CASE("glue validates particles") {
  const GluedGraph single = glue({column(2)});
  CHECK(single.splice_size == 2);
  CHECK(reduction_bound(single).rho == 1);
  CHECK(reduction_bound(single).core.empty());

  const GluedGraph pair = glue({diagonal(3), diagonal(3)});
  CHECK(reduction_bound(pair).rho == 4);

  CHECK_THROWS_AS(glue({}), std::invalid_argument);
  CHECK_THROWS_AS(glue({diagonal(3), diagonal(2)}), std::invalid_argument);
  CHECK_THROWS_AS(glue({WarpingGraph{2, 2, {{1, 1}, {1, 2}, {2, 2}}}}),
                  std::invalid_argument);
}

TEST_CASE("splice redundancy search") {
  // All-diagonal particles leave every neighbor at degree one.
  CHECK(!find_redundant_splice_node(glue({diagonal(3), diagonal(3)})));

  // A single column K_{3,1} has every splice node redundant; the smallest
  // index wins.
  const auto node = find_redundant_splice_node(glue({column(3)}));
  REQUIRE(node.has_value());
  CHECK(*node == 1);
}

TEST_CASE("splice node removal") {
  const GluedGraph glued = glue({column(2)});
  const GluedGraph reduced = remove_splice_node(glued, 2);
  CHECK(reduced.splice_size == 1);
  CHECK(reduced.particles[0] == WarpingGraph{1, 1, {{1, 1}}});
  CHECK(reduction_bound(reduced).rho == reduction_bound(glued).rho);

  CHECK_THROWS_AS(remove_splice_node(glue({diagonal(2)}), 1), std::invalid_argument);
}

TEST_CASE("redundant splice node exists above the bound") {
  // Randomized sweep of the existence guarantee; the exhaustive small-order
  // sweep lives in the verification suite.
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    const int m = 2 + static_cast<int>(rng() % 7);
    const int n_particles = 1 + static_cast<int>(rng() % 3);
    std::vector<WarpingGraph> particles;
    std::vector<int> lengths;
    for (int k = 0; k < n_particles; ++k) {
      const int n = 1 + static_cast<int>(rng() % 4);
      lengths.push_back(n);
      // Random warping path by uniform steps, then compactified.
      WarpingPath p{m, n, {{1, 1}}};
      int i = 1;
      int j = 1;
      while (i < m || j < n) {
        int c = i == m ? 1 : (j == n ? 0 : static_cast<int>(rng() % 3));
        if (c == 0) {
          ++i;
        } else if (c == 1) {
          ++j;
        } else {
          ++i;
          ++j;
        }
        p.points.push_back({i, j});
      }
      particles.push_back(compactify(path_to_graph(p)));
    }
    const auto bound = reduction_bound_sample(lengths);
    GluedGraph glued = glue(std::move(particles));
    const auto node = find_redundant_splice_node(glued);
    if (glued.splice_size > bound.rho) REQUIRE(node.has_value());
    if (node) {
      const GluedGraph reduced = remove_splice_node(glued, *node);
      REQUIRE(reduced.splice_size == m - 1);
      REQUIRE(reduction_bound(reduced).rho == bound.rho);
    }
  }
}

TEST_CASE("bound grows by n - 2 per added core series") {
  std::vector<int> lengths{3, 3};
  long long rho = reduction_bound_sample(lengths).rho;
  for (int extra : {2, 4, 5}) {
    lengths.push_back(extra);
    const long long next = reduction_bound_sample(lengths).rho;
    CHECK(next == rho + extra - 2);
    rho = next;
  }
}
