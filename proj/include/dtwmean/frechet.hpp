#pragma once

#include <string>
#include <vector>

#include "dtwmean/core.hpp"
#include "dtwmean/dtw.hpp"

namespace dtwmean {

struct SolverCaps;  // solver.hpp

/// A sample of N time series over one DTW space, with one power loss per
/// series. The Frechet value of a candidate x is
///   F(x) = (1/N) * sum_k loss_k(dtw(x, sample[k]))
/// Weighted problems fold their weights into the losses; the 1/N factor is
/// always applied.
struct FrechetProblem {
  DtwSpace space;
  std::vector<TimeSeries> sample;
  std::vector<LossFunction> losses;

  int size() const { return static_cast<int>(sample.size()); }
  std::vector<int> lengths() const;
};

void validate_problem(const FrechetProblem& p);

double frechet_value(const FrechetProblem& p, const TimeSeries& x);

/// Restricted variances F_m* for m = 1..m_max together with the running
/// minima v_m = min_{l <= m} F_l* (non-increasing by construction) and the
/// minimizers that attain each F_m*.
struct VarianceCurve {
  std::vector<double> f_star;       // [m-1] = F_m*
  std::vector<double> running_min;  // [m-1] = v_m
  std::vector<TimeSeries> argmin;

  int argmin_length() const;  // smallest m attaining min F_m*
};

/// Exact minimum of F over candidates of length m, at desk scale.
double restricted_variance(const FrechetProblem& p, int m, const SolverCaps& caps);
double restricted_variance(const FrechetProblem& p, int m);

VarianceCurve variance_curve(const FrechetProblem& p, int m_max, const SolverCaps& caps);
VarianceCurve variance_curve(const FrechetProblem& p, int m_max);

/// One F evaluation along a parametric candidate family.
struct FamilySample {
  double t = 0.0;
  double value = 0.0;
};

/// Per-length coordinate grids for the infimum probe of the demo problem.
/// Values are k/denominator for k in [-denominator..denominator], so exact 0
/// and +-1 are always on the grid.
struct DemoGrid {
  std::vector<long long> denominators = {1000, 1000, 20, 20};
};

/// Outcome of probing the fixed two-series problem over the gap-penalty
/// space (sample (1,1) and (1,-1), unit weights, linear loss). Evaluates F
/// along the length-1 family (t) and the length-2 family (1,t) for t
/// descending from 1 to 0, then sweeps a dense candidate grid over lengths up
/// to the grid size and reports the empirical infimum and whether any grid
/// candidate attains it.
struct NonexistenceReport {
  std::vector<FamilySample> family_len1;  // candidates (t)
  std::vector<FamilySample> family_len2;  // candidates (1, t)
  std::string best_family;                // family reaching the lowest value
  bool best_family_strictly_decreasing = false;
  double family_infimum = 0.0;  // lowest value along the best family
  double grid_minimum = 0.0;
  TimeSeries grid_minimizer;  // lexicographically smallest, shortest first
  long long grid_candidates = 0;
  double empirical_infimum = 0.0;
  bool attained_on_grid = false;
};

FrechetProblem nonexistence_problem();
NonexistenceReport nonexistence_demo(int steps, const DemoGrid& grid = {});

}  // namespace dtwmean
