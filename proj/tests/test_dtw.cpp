#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <random>
#include <set>

#include "dtwmean/dtw.hpp"
#include "dtwmean/verify.hpp"

using namespace dtwmean;

namespace {

TimeSeries random_series(std::mt19937_64& rng, int length) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> values(static_cast<std::size_t>(length));
  for (auto& v : values) v = value(rng);
  return TimeSeries::of_reals(std::move(values));
}

}  // namespace

TEST_CASE("alignment cost examples") {
  const DtwSpace eucl = euclidean_space();
  const TimeSeries single = TimeSeries::of_reals({5.0});
  CHECK(alignment_cost(eucl, single, single, WarpingPath{1, 1, {{1, 1}}}) == 0.0);

  const TimeSeries x = TimeSeries::of_reals({0.0, 0.0});
  const TimeSeries y = TimeSeries::of_reals({0.0, 1.0});
  CHECK(alignment_cost(eucl, x, y, WarpingPath{2, 2, {{1, 1}, {2, 2}}}) == 1.0);
  CHECK(alignment_cost(eucl, x, y, WarpingPath{2, 2, {{1, 1}, {1, 2}, {2, 2}}}) == 2.0);
}

TEST_CASE("invalid paths are rejected with the violated condition") {
  const DtwSpace eucl = euclidean_space();
  const TimeSeries x = TimeSeries::of_reals({0.0, 0.0});
  const TimeSeries y = TimeSeries::of_reals({0.0, 1.0});

  CHECK(warping_path_violation(WarpingPath{2, 2, {{1, 1}, {2, 2}}}) == std::nullopt);
  auto boundary = warping_path_violation(WarpingPath{2, 2, {{1, 2}, {2, 2}}});
  REQUIRE(boundary.has_value());
  CHECK(boundary->find("boundary") == 0);
  auto step = warping_path_violation(WarpingPath{3, 3, {{1, 1}, {3, 3}}});
  REQUIRE(step.has_value());
  CHECK(step->find("step") == 0);
  auto range = warping_path_violation(WarpingPath{2, 2, {{1, 1}, {2, 3}}});
  REQUIRE(range.has_value());
  CHECK(range->find("range") == 0);

  CHECK_THROWS_WITH_AS(
      alignment_cost(eucl, x, y, WarpingPath{2, 2, {{1, 1}, {2, 1}}}),
      doctest::Contains("boundary"), std::invalid_argument);
  // Path order must match the series lengths.
  CHECK_THROWS_AS(alignment_cost(eucl, x, y, WarpingPath{1, 1, {{1, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("path enumeration counts") {
  CHECK(enumerate_warping_paths(1, 5).size() == 1);
  CHECK(enumerate_warping_paths(3, 3).size() == 13);
  CHECK(delannoy_number(1, 1) == 1);
  CHECK(delannoy_number(2, 2) == 3);
  CHECK(delannoy_number(3, 3) == 13);
  CHECK(delannoy_number(4, 4) == 63);
  CHECK(delannoy_number(8, 8) == 48639);
  CHECK(delannoy_number(9, 9) == 265729);

  // Order 2x2 in full: diagonal, right-then-down, down-then-right.
  const auto paths = enumerate_warping_paths(2, 2);
  REQUIRE(paths.size() == 3);
  std::set<std::vector<PathPoint>> expected{
      {{1, 1}, {2, 2}},
      {{1, 1}, {1, 2}, {2, 2}},
      {{1, 1}, {2, 1}, {2, 2}},
  };
  std::set<std::vector<PathPoint>> got;
  for (const auto& p : paths) got.insert(p.points);
  CHECK(got == expected);

  CHECK_THROWS_AS(enumerate_warping_paths(9, 2), std::invalid_argument);
  CHECK_NOTHROW(enumerate_warping_paths(9, 2, 9));
}

TEST_CASE("path lengths stay between max(m,n) and m+n-1") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (const auto& p : enumerate_warping_paths(m, n)) {
        REQUIRE(p.length() >= std::max(m, n));
        REQUIRE(p.length() <= m + n - 1);
      }
}

TEST_CASE("dtw distance examples") {
  const DtwSpace eucl = euclidean_space();
  const TimeSeries x = TimeSeries::of_reals({0.0, 0.0});
  const TimeSeries y = TimeSeries::of_reals({0.0, 1.0});

  // Oracle first: the enumeration fixes the expected optimum.
  const DtwResult oracle = dtw_distance_bruteforce(eucl, x, y);
  CHECK(oracle.raw_cost == 1.0);
  const DtwResult fast = dtw_distance(eucl, x, y);
  CHECK(fast.distance == 1.0);
  CHECK(fast.raw_cost == 1.0);
  CHECK(fast.distance == oracle.distance);

  const TimeSeries z = TimeSeries::of_reals({0.3, -0.2, 0.9});
  CHECK(dtw_distance(eucl, z, z).distance == 0.0);

  const DtwSpace gap = xor_zero_space();
  const TimeSeries a = TimeSeries::of_reals({1.0, 1.0});
  const TimeSeries b = TimeSeries::of_reals({1.0, -1.0});
  CHECK(dtw_distance_bruteforce(gap, a, b).distance == 4.0);
  CHECK(dtw_distance(gap, a, b).distance == 4.0);

  const TimeSeries one = TimeSeries::of_reals({1.0});
  const TimeSeries ones = TimeSeries::of_reals({1.0, 1.0, 1.0});
  CHECK(dtw_distance_bruteforce(eucl, one, ones).distance == 0.0);
}

TEST_CASE("canonical backtrace prefers the diagonal") {
  const DtwSpace eucl = euclidean_space();
  const TimeSeries flat = TimeSeries::of_reals({0.0, 0.0});
  const DtwResult r = dtw_distance(eucl, flat, flat);
  CHECK(r.path.points == std::vector<PathPoint>{{1, 1}, {2, 2}});

  // Ties between vertical and horizontal resolve to vertical.
  const TimeSeries x3 = TimeSeries::of_reals({0.0, 0.0, 0.0});
  const DtwResult r2 = dtw_distance(eucl, x3, flat);
  CHECK(r2.path.points == std::vector<PathPoint>{{1, 1}, {2, 1}, {3, 2}});
}

TEST_CASE("dynamic program agrees with the enumeration oracle") {
  std::mt19937_64 rng(42);
  const DtwSpace eucl = euclidean_space();
  for (int it = 0; it < 1000; ++it) {
    const TimeSeries x = random_series(rng, 1 + static_cast<int>(rng() % 6));
    const TimeSeries y = random_series(rng, 1 + static_cast<int>(rng() % 6));
    const DtwResult fast = dtw_distance(eucl, x, y);
    const DtwResult slow = dtw_distance_bruteforce(eucl, x, y);
    REQUIRE(fast.distance == doctest::Approx(slow.distance).epsilon(1e-12));
    REQUIRE(warping_path_violation(fast.path) == std::nullopt);
    REQUIRE(fast.distance == eucl.transform.apply(fast.raw_cost));
    REQUIRE(alignment_cost(eucl, x, y, fast.path) == doctest::Approx(fast.raw_cost));
    // Symmetric raw cost.
    REQUIRE(dtw_distance(eucl, y, x).distance ==
            doctest::Approx(fast.distance).epsilon(1e-12));
  }
}

TEST_CASE("attribute space mismatch is rejected") {
  const DtwSpace eucl = euclidean_space();
  CHECK_THROWS_AS(dtw_distance(eucl, TimeSeries::of_reals({1.0}),
                               TimeSeries::of_symbols({0})),
                  std::invalid_argument);
}
