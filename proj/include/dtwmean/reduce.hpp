#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dtwmean/frechet.hpp"
#include "dtwmean/glue.hpp"

namespace dtwmean {

/// Record of one shortening step: which element was removed and how the
/// Frechet value moved, plus the glued graph and per-series optimal paths
/// that justified the removal.
struct ReductionStep {
  int removed_index = 0;  // 1-based element index in the candidate
  double f_before = 0.0;
  double f_after = 0.0;
  GluedGraph glued;
  std::vector<WarpingPath> particle_paths;
};

/// One shortening step: aligns x against every sample series along the
/// canonical optimal paths, compactifies and glues the warping graphs, and
/// removes the smallest splice node that is redundant in every particle.
/// Returns the shortened series and the step record, or nullopt when no such
/// node exists. A removable node is guaranteed whenever ell(x) exceeds the
/// reduction bound of the sample, and the Frechet value never increases.
std::optional<std::pair<TimeSeries, ReductionStep>> reduce_once(
    const FrechetProblem& p, const TimeSeries& x, double eps = 1e-9);

/// Applies reduce_once until no redundant splice node remains. The final
/// length never exceeds the reduction bound; the Frechet value is
/// non-increasing across the step list.
std::pair<TimeSeries, std::vector<ReductionStep>> reduce_to_bound(
    const FrechetProblem& p, const TimeSeries& x, double eps = 1e-9);

}  // namespace dtwmean
