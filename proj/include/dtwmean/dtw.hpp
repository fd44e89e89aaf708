#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtwmean/core.hpp"

namespace dtwmean {

/// A point (i, j) of a warping path, 1-based in both coordinates.
struct PathPoint {
  int i = 0;
  int j = 0;
  auto operator<=>(const PathPoint&) const = default;
};

/// A warping path of order m x n: starts at (1,1), ends at (m,n), and each
/// step advances by (1,0), (0,1) or (1,1).
struct WarpingPath {
  int m = 0;
  int n = 0;
  std::vector<PathPoint> points;

  int length() const { return static_cast<int>(points.size()); }
  bool operator==(const WarpingPath&) const = default;
};

/// Names the violated path condition, or nullopt when the path is valid.
std::optional<std::string> warping_path_violation(const WarpingPath& p);
void require_valid_path(const WarpingPath& p);

struct DtwResult {
  double distance = 0.0;  // transform applied to raw_cost
  double raw_cost = 0.0;  // minimal summed local distance
  WarpingPath path;       // one optimal path, canonical backtrace
};

/// Summed local distance along path p between x and y.
double alignment_cost(const DtwSpace& space, const TimeSeries& x,
                      const TimeSeries& y, const WarpingPath& p);

/// Exact DTW distance by dynamic programming. The backtrace resolves ties by
/// preferring the diagonal predecessor, then the vertical one (i-1, j), then
/// the horizontal one, so the returned optimal path is canonical.
DtwResult dtw_distance(const DtwSpace& space, const TimeSeries& x, const TimeSeries& y);

/// Minimal raw alignment cost only, no path. Evaluation kernel for the
/// candidate sweeps, which never look at the optimal path.
double dtw_min_cost(const DtwSpace& space, const TimeSeries& x, const TimeSeries& y);

/// Complete, duplicate-free enumeration of all warping paths of order m x n.
/// Guarded by a cap on max(m, n) because the count grows like the Delannoy
/// numbers.
std::vector<WarpingPath> enumerate_warping_paths(int m, int n, int max_order = 8);

/// Test oracle: minimizes the transformed alignment cost over the full path
/// enumeration.
DtwResult dtw_distance_bruteforce(const DtwSpace& space, const TimeSeries& x,
                                  const TimeSeries& y, int max_order = 8);

/// D(m,n) = D(m-1,n) + D(m,n-1) + D(m-1,n-1) with D(1,.) = D(.,1) = 1.
long long delannoy_number(int m, int n);

}  // namespace dtwmean
