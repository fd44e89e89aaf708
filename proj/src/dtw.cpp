#include "dtwmean/dtw.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dtwmean {

std::optional<std::string> warping_path_violation(const WarpingPath& p) {
  if (p.m < 1 || p.n < 1) return "order: m and n must be >= 1";
  if (p.points.empty()) return "boundary: path has no points";
  for (const auto& pt : p.points) {
    if (pt.i < 1 || pt.i > p.m || pt.j < 1 || pt.j > p.n) {
      std::ostringstream msg;
      msg << "range: point (" << pt.i << "," << pt.j << ") outside [1.." << p.m
          << "]x[1.." << p.n << "]";
      return msg.str();
    }
  }
  if (p.points.front() != PathPoint{1, 1})
    return "boundary: first point must be (1,1)";
  if (p.points.back() != PathPoint{p.m, p.n}) {
    std::ostringstream msg;
    msg << "boundary: last point must be (" << p.m << "," << p.n << ")";
    return msg.str();
  }
  for (std::size_t l = 0; l + 1 < p.points.size(); ++l) {
    const int di = p.points[l + 1].i - p.points[l].i;
    const int dj = p.points[l + 1].j - p.points[l].j;
    const bool ok = (di == 1 && dj == 0) || (di == 0 && dj == 1) || (di == 1 && dj == 1);
    if (!ok) {
      std::ostringstream msg;
      msg << "step: transition (" << p.points[l].i << "," << p.points[l].j << ") -> ("
          << p.points[l + 1].i << "," << p.points[l + 1].j
          << ") is not a unit step right, down or diagonal";
      return msg.str();
    }
  }
  return std::nullopt;
}

void require_valid_path(const WarpingPath& p) {
  if (auto why = warping_path_violation(p))
    throw std::invalid_argument("invalid warping path: " + *why);
}

double alignment_cost(const DtwSpace& space, const TimeSeries& x,
                      const TimeSeries& y, const WarpingPath& p) {
  space.check_series(x);
  space.check_series(y);
  if (p.m != x.length() || p.n != y.length())
    throw std::invalid_argument("warping path order does not match series lengths");
  require_valid_path(p);
  double cost = 0.0;
  for (const auto& pt : p.points)
    cost += local_distance(space, x.elements[pt.i - 1], y.elements[pt.j - 1]);
  return cost;
}

DtwResult dtw_distance(const DtwSpace& space, const TimeSeries& x, const TimeSeries& y) {
  space.check_series(x);
  space.check_series(y);
  const int m = x.length();
  const int n = y.length();

  std::vector<double> cum(static_cast<std::size_t>(m) * n);
  auto at = [&](int i, int j) -> double& { return cum[static_cast<std::size_t>(i) * n + j]; };
  auto d = [&](int i, int j) {
    return local_distance(space, x.elements[i], y.elements[j]);
  };

  at(0, 0) = d(0, 0);
  for (int j = 1; j < n; ++j) at(0, j) = at(0, j - 1) + d(0, j);
  for (int i = 1; i < m; ++i) {
    at(i, 0) = at(i - 1, 0) + d(i, 0);
    for (int j = 1; j < n; ++j)
      at(i, j) = d(i, j) + std::min({at(i - 1, j - 1), at(i - 1, j), at(i, j - 1)});
  }

  // Canonical backtrace: diagonal wins ties, then vertical, then horizontal.
  std::vector<PathPoint> rev;
  int i = m - 1;
  int j = n - 1;
  rev.push_back({m, n});
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      const double diag = at(i - 1, j - 1);
      const double vert = at(i - 1, j);
      const double horiz = at(i, j - 1);
      const double best = std::min({diag, vert, horiz});
      if (diag == best) {
        --i;
        --j;
      } else if (vert == best) {
        --i;
      } else {
        --j;
      }
    }
    rev.push_back({i + 1, j + 1});
  }
  std::reverse(rev.begin(), rev.end());

  DtwResult r;
  r.raw_cost = at(m - 1, n - 1);
  r.distance = space.transform.apply(r.raw_cost);
  r.path = WarpingPath{m, n, std::move(rev)};
  return r;
}

double dtw_min_cost(const DtwSpace& space, const TimeSeries& x, const TimeSeries& y) {
  space.check_series(x);
  space.check_series(y);
  const int m = x.length();
  const int n = y.length();
  // Rolling single row keeps the sweep allocation-light.
  std::vector<double> row(static_cast<std::size_t>(n));
  row[0] = local_distance(space, x.elements[0], y.elements[0]);
  for (int j = 1; j < n; ++j)
    row[j] = row[j - 1] + local_distance(space, x.elements[0], y.elements[j]);
  for (int i = 1; i < m; ++i) {
    double diag = row[0];
    row[0] += local_distance(space, x.elements[i], y.elements[0]);
    for (int j = 1; j < n; ++j) {
      const double up = row[j];
      row[j] = local_distance(space, x.elements[i], y.elements[j]) +
               std::min({diag, up, row[j - 1]});
      diag = up;
    }
  }
  return row[static_cast<std::size_t>(n) - 1];
}

namespace {

void extend_paths(int m, int n, std::vector<PathPoint>& current,
                  std::vector<WarpingPath>& out) {
  const PathPoint last = current.back();
  if (last.i == m && last.j == n) {
    out.push_back(WarpingPath{m, n, current});
    return;
  }
  const PathPoint steps[3] = {{last.i + 1, last.j},
                              {last.i, last.j + 1},
                              {last.i + 1, last.j + 1}};
  for (const auto& next : steps) {
    if (next.i > m || next.j > n) continue;
    current.push_back(next);
    extend_paths(m, n, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<WarpingPath> enumerate_warping_paths(int m, int n, int max_order) {
  if (m < 1 || n < 1) throw std::invalid_argument("path order must be >= 1");
  if (m > max_order || n > max_order) {
    std::ostringstream msg;
    msg << "enumeration cap exceeded: order " << m << "x" << n << " with cap "
        << max_order;
    throw std::invalid_argument(msg.str());
  }
  std::vector<WarpingPath> out;
  out.reserve(static_cast<std::size_t>(delannoy_number(m, n)));
  std::vector<PathPoint> current{{1, 1}};
  extend_paths(m, n, current, out);
  return out;
}

DtwResult dtw_distance_bruteforce(const DtwSpace& space, const TimeSeries& x,
                                  const TimeSeries& y, int max_order) {
  space.check_series(x);
  space.check_series(y);
  const auto paths = enumerate_warping_paths(x.length(), y.length(), max_order);
  double best = std::numeric_limits<double>::infinity();
  const WarpingPath* argmin = nullptr;
  for (const auto& p : paths) {
    const double c = alignment_cost(space, x, y, p);
    if (c < best) {
      best = c;
      argmin = &p;
    }
  }
  DtwResult r;
  r.raw_cost = best;
  r.distance = space.transform.apply(best);
  r.path = *argmin;
  return r;
}

long long delannoy_number(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("Delannoy arguments must be >= 1");
  std::vector<long long> row(static_cast<std::size_t>(n), 1);
  for (int i = 1; i < m; ++i) {
    long long prev_diag = row[0];  // row value at (i-1, j-1)
    for (int j = 1; j < n; ++j) {
      const long long up = row[j];
      row[j] = row[j] + row[j - 1] + prev_diag;
      prev_diag = up;
    }
  }
  return row[static_cast<std::size_t>(n) - 1];
}

}  // namespace dtwmean
