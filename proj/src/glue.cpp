#include "dtwmean/glue.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dtwmean {

ReductionBoundReport reduction_bound_sample(const std::vector<int>& lengths) {
  if (lengths.empty()) throw std::invalid_argument("sample must not be empty");
  ReductionBoundReport report;
  long long core_sum = 0;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    if (lengths[k] < 1) throw std::invalid_argument("series lengths must be >= 1");
    if (lengths[k] >= 2) {
      report.core.push_back(static_cast<int>(k) + 1);
      core_sum += lengths[k];
    }
  }
  report.trivial_count = static_cast<int>(lengths.size() - report.core.size());
  if (report.core.empty()) {
    report.rho = 1;
  } else {
    report.rho = core_sum - 2 * (static_cast<long long>(report.core.size()) - 1);
  }
  return report;
}

GluedGraph glue(std::vector<WarpingGraph> particles) {
  if (particles.empty()) throw std::invalid_argument("glued graph needs at least one particle");
  const int splice = particles.front().m;
  for (std::size_t k = 0; k < particles.size(); ++k) {
    if (particles[k].m != splice) {
      std::ostringstream msg;
      msg << "particle " << k + 1 << " has splice size " << particles[k].m
          << ", expected " << splice;
      throw std::invalid_argument(msg.str());
    }
    if (!is_compact(particles[k])) {
      std::ostringstream msg;
      msg << "particle " << k + 1 << " is not compact";
      throw std::invalid_argument(msg.str());
    }
  }
  return {splice, std::move(particles)};
}

ReductionBoundReport reduction_bound(const GluedGraph& g) {
  std::vector<int> lengths;
  lengths.reserve(g.particles.size());
  for (const auto& p : g.particles) lengths.push_back(p.n);
  return reduction_bound_sample(lengths);
}

std::optional<int> find_redundant_splice_node(const GluedGraph& g) {
  if (g.particles.empty()) throw std::invalid_argument("glued graph has no particles");
  std::vector<int> common = redundant_nodes(g.particles.front(), Partition::V);
  for (std::size_t k = 1; k < g.particles.size() && !common.empty(); ++k) {
    const std::vector<int> next = redundant_nodes(g.particles[k], Partition::V);
    std::vector<int> merged;
    std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                          std::back_inserter(merged));
    common = std::move(merged);
  }
  if (common.empty()) return std::nullopt;
  return common.front();
}

GluedGraph remove_splice_node(const GluedGraph& g, int v_index) {
  if (g.particles.empty()) throw std::invalid_argument("glued graph has no particles");
  GluedGraph out;
  out.splice_size = g.splice_size - 1;
  out.particles.reserve(g.particles.size());
  for (const auto& p : g.particles) out.particles.push_back(delete_node(p, v_index));
  return out;
}

}  // namespace dtwmean
