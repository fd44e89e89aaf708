#include "dtwmean/reduce.hpp"

#include <sstream>
#include <stdexcept>

#include "dtwmean/io.hpp"

namespace dtwmean {

std::optional<std::pair<TimeSeries, ReductionStep>> reduce_once(
    const FrechetProblem& p, const TimeSeries& x, double eps) {
  validate_problem(p);
  p.space.check_series(x);

  std::vector<WarpingPath> optimal_paths;
  std::vector<WarpingGraph> particles;
  double f_before = 0.0;
  optimal_paths.reserve(p.sample.size());
  particles.reserve(p.sample.size());
  for (int k = 0; k < p.size(); ++k) {
    DtwResult r = dtw_distance(p.space, x, p.sample[k]);
    f_before += p.losses[k].apply(r.distance);
    particles.push_back(compactify(path_to_graph(r.path)));
    optimal_paths.push_back(std::move(r.path));
  }
  f_before /= p.size();

  GluedGraph glued = glue(std::move(particles));
  const auto node = find_redundant_splice_node(glued);
  if (!node) return std::nullopt;

  TimeSeries shortened = x;
  shortened.elements.erase(shortened.elements.begin() + (*node - 1));
  const double f_after = frechet_value(p, shortened);

  // The removed edges carry non-negative local distances, so the value can
  // only keep or lose mass. Anything beyond float noise means the redundancy
  // search returned a wrong node.
  if (f_after > f_before + eps) {
    ordered_json particles = ordered_json::array();
    for (const auto& particle : glued.particles) particles.push_back(graph_to_json(particle));
    std::ostringstream msg;
    msg << "reduction increased the Frechet value: " << f_before << " -> " << f_after
        << " after removing element " << *node << "; glued graph "
        << ordered_json{{"splice_size", glued.splice_size}, {"particles", particles}}.dump();
    throw std::logic_error(msg.str());
  }

  ReductionStep step;
  step.removed_index = *node;
  step.f_before = f_before;
  step.f_after = f_after;
  step.glued = std::move(glued);
  step.particle_paths = std::move(optimal_paths);
  return std::make_pair(std::move(shortened), std::move(step));
}

std::pair<TimeSeries, std::vector<ReductionStep>> reduce_to_bound(
    const FrechetProblem& p, const TimeSeries& x, double eps) {
  const long long rho = reduction_bound_sample(p.lengths()).rho;

  TimeSeries current = x;
  std::vector<ReductionStep> steps;
  while (true) {
    auto next = reduce_once(p, current, eps);
    if (!next) break;
    current = std::move(next->first);
    steps.push_back(std::move(next->second));
  }
  if (current.length() > rho)
    throw std::logic_error("reduction stopped above the reduction bound");
  return {std::move(current), std::move(steps)};
}

}  // namespace dtwmean
