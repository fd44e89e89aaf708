#include <doctest.h>

#include <stdexcept>

#include <random>

#include "dtwmean/reduce.hpp"
#include "dtwmean/verify.hpp"

using namespace dtwmean;

namespace {

FrechetProblem euclidean_problem(std::vector<TimeSeries> sample) {
  FrechetProblem p;
  p.space = euclidean_space();
  p.sample = std::move(sample);
  p.losses.assign(p.sample.size(), power_loss(1.0, 2.0));
  return p;
}

}  // namespace

TEST_CASE("length-1 sample forces column particles") {
  const FrechetProblem p = euclidean_problem(
      {TimeSeries::of_reals({0.0}), TimeSeries::of_reals({1.0})});
  // rho = 1, so any candidate of length 3 must shrink.
  const TimeSeries x = TimeSeries::of_reals({0.25, 0.5, 0.75});
  const auto step = reduce_once(p, x);
  REQUIRE(step.has_value());
  CHECK(step->first.length() == 2);
  CHECK(step->second.f_after <= step->second.f_before + 1e-9);
}

TEST_CASE("removing a redundant element can strictly decrease F") {
  // The middle element pays a unit of cost against both copies of (0, 4);
  // its neighbors keep every sample element covered after removal.
  const FrechetProblem p = euclidean_problem(
      {TimeSeries::of_reals({0.0, 4.0}), TimeSeries::of_reals({0.0, 4.0})});
  const TimeSeries x = TimeSeries::of_reals({0.0, 5.0, 4.0});
  CHECK(frechet_value(p, x) == doctest::Approx(1.0));

  const auto step = reduce_once(p, x);
  REQUIRE(step.has_value());
  CHECK(step->second.removed_index == 2);
  CHECK(series_equal(step->first, TimeSeries::of_reals({0.0, 4.0})));
  CHECK(step->second.f_before == doctest::Approx(1.0));
  CHECK(step->second.f_after == doctest::Approx(0.0));
  CHECK(step->second.particle_paths.size() == 2);
  CHECK(step->second.glued.splice_size == 3);
}

TEST_CASE("declines when no universally redundant node exists") {
  const FrechetProblem p = euclidean_problem(
      {TimeSeries::of_reals({0.0, 1.0}), TimeSeries::of_reals({0.0, 1.0})});
  // rho = 2 and the candidate aligns diagonally with both series.
  CHECK(!reduce_once(p, TimeSeries::of_reals({0.0, 1.0})));
}

TEST_CASE("naive first-element deletion can increase F; the search declines") {
  const FrechetProblem p = euclidean_problem({TimeSeries::of_reals({0.0, 1.0})});
  const TimeSeries x = TimeSeries::of_reals({0.0, 1.0});
  CHECK(frechet_value(p, x) == 0.0);
  // Chopping the first element raises F; it is not redundant.
  CHECK(frechet_value(p, TimeSeries::of_reals({1.0})) == 1.0);
  CHECK(!reduce_once(p, x));
}

TEST_CASE("means longer than the bound reduce without losing optimality") {
  const FrechetProblem p = euclidean_problem(
      {TimeSeries::of_reals({1.0, 2.0, 3.0}), TimeSeries::of_reals({1.0, 2.0, 3.0})});
  // Appending copies of the last element keeps F at zero; rho is 4.
  const TimeSeries padded = TimeSeries::of_reals({1.0, 2.0, 3.0, 3.0, 3.0});
  CHECK(frechet_value(p, padded) == 0.0);
  const auto step = reduce_once(p, padded);
  REQUIRE(step.has_value());
  CHECK(step->second.f_after == 0.0);

  const auto [reduced, steps] = reduce_to_bound(p, padded);
  CHECK(reduced.length() <= 4);
  CHECK(frechet_value(p, reduced) == 0.0);
  CHECK(steps.size() >= 1);
}

TEST_CASE("reduce_to_bound terminates at or below the bound with monotone F") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  auto series = [&](int len) {
    std::vector<double> v(static_cast<std::size_t>(len));
    for (auto& x : v) x = value(rng);
    return TimeSeries::of_reals(std::move(v));
  };
  for (int it = 0; it < 200; ++it) {
    FrechetProblem p;
    p.space = euclidean_space();
    const int n_series = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n_series; ++k) {
      p.sample.push_back(series(1 + static_cast<int>(rng() % 4)));
      p.losses.push_back(power_loss(1.0, 2.0));
    }
    const long long rho = reduction_bound_sample(p.lengths()).rho;
    const int excess = 1 + static_cast<int>(rng() % 3);
    const TimeSeries x = series(static_cast<int>(rho) + excess);

    const auto [reduced, steps] = reduce_to_bound(p, x);
    REQUIRE(reduced.length() <= rho);
    REQUIRE(static_cast<int>(steps.size()) >= excess);
    REQUIRE(static_cast<int>(steps.size()) == x.length() - reduced.length());
    double previous = frechet_value(p, x);
    for (const auto& s : steps) {
      REQUIRE(s.f_before == doctest::Approx(previous).epsilon(1e-12));
      REQUIRE(s.f_after <= s.f_before + 1e-9);
      previous = s.f_after;
    }
  }
}

TEST_CASE("reduction works on symbolic problems") {
  FrechetProblem p;
  p.space = binary_alphabet_space();
  p.sample = {TimeSeries::of_symbols({0, 1}), TimeSeries::of_symbols({1, 0})};
  p.losses = {power_loss(1.0, 1.0), power_loss(1.0, 1.0)};
  // rho = 2; a length-4 candidate must lose at least two elements.
  const auto [reduced, steps] = reduce_to_bound(p, TimeSeries::of_symbols({0, 1, 1, 0}));
  CHECK(reduced.length() <= 2);
  CHECK(steps.size() >= 2);
}
