#include "dtwmean/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "dtwmean/glue.hpp"

namespace dtwmean {

namespace {

// Absolute slack when comparing candidate F values; equal-within-slack
// results fall back to the lexicographic tie-break.
constexpr double kTieEps = 1e-12;

// Slack for the invariant that the reported value matches a direct Frechet
// evaluation of the reported minimizer.
constexpr double kValueEps = 1e-9;

void check_common_caps(const FrechetProblem& p, int m, const SolverCaps& caps) {
  caps.validate();
  if (m < 1) throw std::invalid_argument("candidate length must be >= 1");
  if (m > caps.max_m) {
    std::ostringstream msg;
    msg << "cap exceeded: candidate length " << m << " > max_m " << caps.max_m;
    throw std::invalid_argument(msg.str());
  }
  if (p.size() > caps.max_sample) {
    std::ostringstream msg;
    msg << "cap exceeded: sample size " << p.size() << " > max_sample " << caps.max_sample;
    throw std::invalid_argument(msg.str());
  }
  for (const auto& s : p.sample) {
    if (s.length() > caps.max_n) {
      std::ostringstream msg;
      msg << "cap exceeded: sample series length " << s.length() << " > max_n "
          << caps.max_n;
      throw std::invalid_argument(msg.str());
    }
  }
}

void check_value_consistency(const FrechetProblem& p, MeanResult& r) {
  const double direct = frechet_value(p, r.minimizer);
  if (std::abs(direct - r.value) > kValueEps) {
    std::ostringstream msg;
    msg << "solver value " << r.value << " disagrees with direct Frechet value "
        << direct << " of the reported minimizer";
    throw std::logic_error(msg.str());
  }
}

}  // namespace

void SolverCaps::validate() const {
  if (max_m < 1 || max_n < 1 || max_sample < 1 || max_configurations < 1 ||
      alphabet_max_candidates < 1)
    throw std::invalid_argument("solver caps must all be positive");
}

const char* mean_method_name(MeanMethod m) {
  switch (m) {
    case MeanMethod::AlphabetEnumeration: return "alphabet-enumeration";
    case MeanMethod::PathCombination: return "path-combination";
    case MeanMethod::LengthSweep: return "length-sweep";
    case MeanMethod::GridApproximation: return "grid-approximation";
  }
  return "unknown";
}

MeanResult restricted_mean_alphabet(const FrechetProblem& p, int m, const SolverCaps& caps) {
  validate_problem(p);
  check_common_caps(p, m, caps);
  if (p.space.attributes.kind != AttrKind::Symbol)
    throw std::invalid_argument("alphabet enumeration needs a finite symbolic attribute space");

  const int a = static_cast<int>(p.space.attributes.alphabet.size());
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= a;
    if (total > caps.alphabet_max_candidates) {
      std::ostringstream msg;
      msg << "cap exceeded: |alphabet|^m = " << a << "^" << m << " > "
          << caps.alphabet_max_candidates;
      throw std::invalid_argument(msg.str());
    }
  }

  std::vector<int> ids(static_cast<std::size_t>(m), 0);
  MeanResult best;
  best.value = std::numeric_limits<double>::infinity();
  long long examined = 0;
  while (true) {
    ++examined;
    const TimeSeries candidate = TimeSeries::of_symbols(ids);
    const double value = frechet_value(p, candidate);
    // Lexicographic enumeration order: the first candidate within the tie
    // slack is already the smallest, so only strict improvements replace it.
    if (value < best.value - kTieEps) {
      best.value = value;
      best.minimizer = candidate;
    }
    int pos = m - 1;
    while (pos >= 0 && ids[pos] == a - 1) {
      ids[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++ids[pos];
  }

  best.length = m;
  best.method = MeanMethod::AlphabetEnumeration;
  best.configurations = examined;
  check_value_consistency(p, best);
  return best;
}

namespace {

// Per candidate position: how many sample elements a path aligns to it and
// their coordinate sums. Quadratic minimization only needs these.
struct PathAggregate {
  std::vector<double> count;  // m
  std::vector<double> sum;    // m * d, row-major
};

std::vector<double> flat_coords(const Attribute& a) {
  if (std::holds_alternative<double>(a)) return {std::get<double>(a)};
  return std::get<std::vector<double>>(a);
}

PathAggregate aggregate_path(const WarpingPath& path, const TimeSeries& series, int d) {
  PathAggregate agg;
  agg.count.assign(static_cast<std::size_t>(path.m), 0.0);
  agg.sum.assign(static_cast<std::size_t>(path.m) * d, 0.0);
  for (const auto& pt : path.points) {
    agg.count[pt.i - 1] += 1.0;
    const auto coords = flat_coords(series.elements[pt.j - 1]);
    for (int c = 0; c < d; ++c) agg.sum[static_cast<std::size_t>(pt.i - 1) * d + c] += coords[c];
  }
  for (double c : agg.count)
    if (c < 1.0)
      throw std::logic_error("warping path leaves a candidate position unaligned");
  return agg;
}

double config_cost(const FrechetProblem& p, const std::vector<const WarpingPath*>& paths,
                   const std::vector<double>& candidate, int d) {
  double acc = 0.0;
  for (int k = 0; k < p.size(); ++k) {
    const double w = p.losses[k].weight;
    if (w == 0.0) continue;
    double series_cost = 0.0;
    for (const auto& pt : paths[k]->points) {
      const auto coords = flat_coords(p.sample[k].elements[pt.j - 1]);
      for (int c = 0; c < d; ++c) {
        const double diff = candidate[static_cast<std::size_t>(pt.i - 1) * d + c] - coords[c];
        series_cost += diff * diff;
      }
    }
    acc += w * series_cost;
  }
  return acc / p.size();
}

TimeSeries series_from_flat(const std::vector<double>& flat, int m, int d, AttrKind kind) {
  if (kind == AttrKind::Real) {
    return TimeSeries::of_reals(flat);
  }
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    rows[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i) * d,
                   flat.begin() + static_cast<std::ptrdiff_t>(i + 1) * d);
  return TimeSeries::of_vectors(std::move(rows));
}

}  // namespace

MeanResult restricted_mean_euclidean(const FrechetProblem& p, int m, const SolverCaps& caps) {
  validate_problem(p);
  check_common_caps(p, m, caps);

  const auto& space = p.space;
  if (space.attributes.kind == AttrKind::Symbol)
    throw std::invalid_argument("path-combination solver needs real or vector attributes");
  if (space.local.kind != LocalDistance::Kind::SquaredEuclidean ||
      space.transform.kind != MonotoneTransform::Kind::SquareRoot)
    throw std::invalid_argument(
        "path-combination solver needs squared-euclidean local distance with the "
        "square-root transform; use restricted_mean_grid for other spaces");
  for (const auto& loss : p.losses)
    if (loss.exponent != 2.0)
      throw std::invalid_argument(
          "path-combination solver needs quadratic losses (p = 2); use "
          "restricted_mean_grid for other losses");

  const int n_series = p.size();
  const int d = space.attributes.kind == AttrKind::Real ? 1 : space.attributes.dim;

  double total_weight = 0.0;
  for (const auto& loss : p.losses) total_weight += loss.weight;
  if (total_weight == 0.0) {
    // Every candidate has value zero; report the all-zeros series.
    MeanResult r;
    r.minimizer = series_from_flat(std::vector<double>(static_cast<std::size_t>(m) * d, 0.0),
                                   m, d, space.attributes.kind);
    r.value = 0.0;
    r.length = m;
    r.method = MeanMethod::PathCombination;
    r.configurations = 0;
    return r;
  }

  long long combinations = 1;
  for (const auto& s : p.sample) {
    combinations *= delannoy_number(m, s.length());
    if (combinations > caps.max_configurations) {
      std::ostringstream msg;
      msg << "cap exceeded: path combinations > " << caps.max_configurations;
      throw std::invalid_argument(msg.str());
    }
  }

  std::vector<std::vector<WarpingPath>> paths(static_cast<std::size_t>(n_series));
  std::vector<std::vector<PathAggregate>> aggregates(static_cast<std::size_t>(n_series));
  for (int k = 0; k < n_series; ++k) {
    paths[k] = enumerate_warping_paths(m, p.sample[k].length(),
                                       std::max({m, p.sample[k].length(), 8}));
    aggregates[k].reserve(paths[k].size());
    for (const auto& path : paths[k])
      aggregates[k].push_back(aggregate_path(path, p.sample[k], d));
  }

  std::vector<std::size_t> choice(static_cast<std::size_t>(n_series), 0);
  std::vector<double> tw(static_cast<std::size_t>(m));
  std::vector<double> ws(static_cast<std::size_t>(m) * d);
  std::vector<double> candidate(static_cast<std::size_t>(m) * d);
  std::vector<const WarpingPath*> config(static_cast<std::size_t>(n_series));

  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> best_candidate;
  std::vector<std::size_t> best_choice;
  long long examined = 0;

  while (true) {
    ++examined;
    std::fill(tw.begin(), tw.end(), 0.0);
    std::fill(ws.begin(), ws.end(), 0.0);
    for (int k = 0; k < n_series; ++k) {
      config[k] = &paths[k][choice[k]];
      const double w = p.losses[k].weight;
      if (w == 0.0) continue;
      const auto& agg = aggregates[k][choice[k]];
      for (int i = 0; i < m; ++i) {
        tw[i] += w * agg.count[i];
        for (int c = 0; c < d; ++c)
          ws[static_cast<std::size_t>(i) * d + c] += w * agg.sum[static_cast<std::size_t>(i) * d + c];
      }
    }
    // Closed-form minimizer of the per-combination quadratic: each position
    // is the weighted average of the sample elements aligned to it.
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < d; ++c)
        candidate[static_cast<std::size_t>(i) * d + c] =
            ws[static_cast<std::size_t>(i) * d + c] / tw[i];
    const double value = config_cost(p, config, candidate, d);

    if (value < best_value - kTieEps) {
      best_value = value;
      best_candidate = candidate;
      best_choice = choice;
    } else if (value <= best_value + kTieEps &&
               std::lexicographical_compare(candidate.begin(), candidate.end(),
                                            best_candidate.begin(), best_candidate.end())) {
      best_candidate = candidate;
      best_choice = choice;
    }

    int pos = n_series - 1;
    while (pos >= 0 && choice[pos] + 1 == paths[pos].size()) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++choice[pos];
  }

  MeanResult r;
  r.minimizer = series_from_flat(best_candidate, m, d, space.attributes.kind);
  r.value = best_value;
  r.length = m;
  r.method = MeanMethod::PathCombination;
  r.configurations = examined;
  for (int k = 0; k < n_series; ++k) r.paths.push_back(paths[k][best_choice[k]]);
  check_value_consistency(p, r);
  return r;
}

MeanResult restricted_mean(const FrechetProblem& p, int m, const SolverCaps& caps) {
  validate_problem(p);
  if (p.space.attributes.kind == AttrKind::Symbol)
    return restricted_mean_alphabet(p, m, caps);
  if (p.space.local.kind == LocalDistance::Kind::SquaredEuclidean &&
      p.space.transform.kind == MonotoneTransform::Kind::SquareRoot) {
    bool quadratic = true;
    for (const auto& loss : p.losses) quadratic = quadratic && loss.exponent == 2.0;
    if (quadratic) return restricted_mean_euclidean(p, m, caps);
  }
  throw std::invalid_argument(
      "no exact solver for this space/loss combination; restricted_mean_grid "
      "offers an approximate coordinate-grid search");
}

MeanResult unrestricted_mean(const FrechetProblem& p, const SolverCaps& caps) {
  validate_problem(p);
  caps.validate();
  const auto bound = reduction_bound_sample(p.lengths());
  if (bound.rho > caps.max_m) {
    std::ostringstream msg;
    msg << "cap exceeded: reduction bound " << bound.rho << " > max_m " << caps.max_m;
    throw std::invalid_argument(msg.str());
  }

  std::optional<MeanResult> best;
  long long examined = 0;
  for (int m = 1; m <= static_cast<int>(bound.rho); ++m) {
    MeanResult r = restricted_mean(p, m, caps);
    examined += r.configurations;
    // Value ties keep the shortest minimizer.
    if (!best || r.value < best->value - kTieEps) best = std::move(r);
  }
  best->method = MeanMethod::LengthSweep;
  best->configurations = examined;
  return *best;
}

MeanResult restricted_mean_grid(const FrechetProblem& p, int m,
                                const std::vector<double>& grid_values,
                                const SolverCaps& caps) {
  validate_problem(p);
  check_common_caps(p, m, caps);
  if (p.space.attributes.kind != AttrKind::Real)
    throw std::invalid_argument("grid fallback supports real scalar attributes only");
  if (grid_values.empty()) throw std::invalid_argument("grid must not be empty");

  std::vector<double> values = grid_values;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= static_cast<long long>(values.size());
    if (total > caps.max_configurations) {
      std::ostringstream msg;
      msg << "cap exceeded: grid candidates > " << caps.max_configurations;
      throw std::invalid_argument(msg.str());
    }
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  std::vector<double> candidate(static_cast<std::size_t>(m));
  MeanResult best;
  best.value = std::numeric_limits<double>::infinity();
  long long examined = 0;
  while (true) {
    ++examined;
    for (int i = 0; i < m; ++i) candidate[i] = values[idx[i]];
    const TimeSeries series = TimeSeries::of_reals(candidate);
    const double value = frechet_value(p, series);
    if (value < best.value - kTieEps) {
      best.value = value;
      best.minimizer = series;
    }
    int pos = m - 1;
    while (pos >= 0 && idx[pos] + 1 == values.size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
  }
  best.length = m;
  best.method = MeanMethod::GridApproximation;
  best.configurations = examined;
  return best;
}

}  // namespace dtwmean
