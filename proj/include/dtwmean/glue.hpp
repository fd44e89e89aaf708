#pragma once

#include <optional>
#include <vector>

#include "dtwmean/wgraph.hpp"

namespace dtwmean {

/// N compact warping graphs sharing the splice partition 1..m by index. Each
/// particle keeps its own edge list; edge sets of distinct particles are
/// disjoint by construction.
struct GluedGraph {
  int splice_size = 0;
  std::vector<WarpingGraph> particles;
};

/// Reduction bound for a sample. A compact particle over a length-1 series is
/// forced to be the star K_{m,1} and is trivial; the core holds the 1-based
/// indices of the non-trivial particles.
struct ReductionBoundReport {
  long long rho = 1;
  std::vector<int> core;  // 1-based series indices with length >= 2
  int trivial_count = 0;
};

/// Bound from the sample lengths alone: rho = sum of core lengths minus
/// 2*(|core|-1) when the core is non-empty, else 1.
ReductionBoundReport reduction_bound_sample(const std::vector<int>& lengths);

GluedGraph glue(std::vector<WarpingGraph> particles);

/// Bound of a glued graph; depends only on the particle partition sizes.
ReductionBoundReport reduction_bound(const GluedGraph& g);

/// Smallest splice index that is redundant in every particle. Guaranteed to
/// exist whenever splice_size > rho(g).
std::optional<int> find_redundant_splice_node(const GluedGraph& g);

/// Removes a universally redundant splice node from every particle. The
/// splice shrinks by one; the reduction bound is unchanged.
GluedGraph remove_splice_node(const GluedGraph& g, int v_index);

}  // namespace dtwmean
