#pragma once

#include <vector>

#include "dtwmean/frechet.hpp"

namespace dtwmean {

/// Hard limits on the exhaustive solvers, enforced before any enumeration
/// begins. The enumerations grow exponentially; the caps keep them at desk
/// scale.
struct SolverCaps {
  int max_m = 10;
  int max_n = 8;
  int max_sample = 6;
  long long max_configurations = 2'000'000;
  long long alphabet_max_candidates = 2'000'000;

  void validate() const;
};

enum class MeanMethod { AlphabetEnumeration, PathCombination, LengthSweep, GridApproximation };

const char* mean_method_name(MeanMethod m);

struct MeanResult {
  TimeSeries minimizer;
  double value = 0.0;
  int length = 0;
  MeanMethod method = MeanMethod::PathCombination;
  long long configurations = 0;
  // Minimizing path combination, one optimal path per sample series. Filled
  // by the path-combination solver only.
  std::vector<WarpingPath> paths;
};

/// Exhaustive minimum of F over all |alphabet|^m candidates of length m.
/// Ties resolve to the lexicographically smallest candidate in symbol order.
MeanResult restricted_mean_alphabet(const FrechetProblem& p, int m,
                                    const SolverCaps& caps = {});

/// Exact restricted mean for squared-euclidean local distance, square-root
/// transform and quadratic losses: enumerates every combination of warping
/// paths, minimizes the induced quadratic in closed form (each candidate
/// element is the weighted average of the sample elements aligned to it) and
/// returns the best combination.
MeanResult restricted_mean_euclidean(const FrechetProblem& p, int m,
                                     const SolverCaps& caps = {});

/// Dispatches to the exact solver matching the problem's space and losses.
MeanResult restricted_mean(const FrechetProblem& p, int m, const SolverCaps& caps = {});

/// Unrestricted mean: solves the restricted problem for every m up to the
/// reduction bound of the sample and returns the best result. No longer
/// candidate can achieve a smaller value.
MeanResult unrestricted_mean(const FrechetProblem& p, const SolverCaps& caps = {});

/// Approximate fallback for losses outside the quadratic case: exhaustive
/// search over a fixed coordinate grid. The result is not a mean
/// certificate; it only bounds F from above.
MeanResult restricted_mean_grid(const FrechetProblem& p, int m,
                                const std::vector<double>& grid_values,
                                const SolverCaps& caps = {});

}  // namespace dtwmean
