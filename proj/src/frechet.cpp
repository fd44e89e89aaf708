#include "dtwmean/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dtwmean/solver.hpp"

namespace dtwmean {

std::vector<int> FrechetProblem::lengths() const {
  std::vector<int> out;
  out.reserve(sample.size());
  for (const auto& s : sample) out.push_back(s.length());
  return out;
}

void validate_problem(const FrechetProblem& p) {
  if (p.sample.empty()) throw std::invalid_argument("sample must not be empty");
  if (p.losses.size() != p.sample.size())
    throw std::invalid_argument("need exactly one loss function per sample series");
  for (const auto& s : p.sample) p.space.check_series(s);
  for (const auto& loss : p.losses) {
    if (loss.weight < 0.0) throw std::invalid_argument("loss weight must be non-negative");
    if (loss.exponent < 1.0) throw std::invalid_argument("loss exponent must be >= 1");
  }
}

double frechet_value(const FrechetProblem& p, const TimeSeries& x) {
  validate_problem(p);
  p.space.check_series(x);
  double acc = 0.0;
  for (int k = 0; k < p.size(); ++k) {
    const double dist = p.space.transform.apply(dtw_min_cost(p.space, x, p.sample[k]));
    acc += p.losses[k].apply(dist);
  }
  return acc / p.size();
}

int VarianceCurve::argmin_length() const {
  int best = 1;
  for (std::size_t i = 1; i < f_star.size(); ++i)
    if (f_star[i] < f_star[best - 1]) best = static_cast<int>(i) + 1;
  return best;
}

double restricted_variance(const FrechetProblem& p, int m, const SolverCaps& caps) {
  return restricted_mean(p, m, caps).value;
}

double restricted_variance(const FrechetProblem& p, int m) {
  return restricted_variance(p, m, SolverCaps{});
}

VarianceCurve variance_curve(const FrechetProblem& p, int m_max, const SolverCaps& caps) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  VarianceCurve curve;
  double running = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= m_max; ++m) {
    MeanResult r = restricted_mean(p, m, caps);
    running = std::min(running, r.value);
    curve.f_star.push_back(r.value);
    curve.running_min.push_back(running);
    curve.argmin.push_back(std::move(r.minimizer));
  }
  return curve;
}

VarianceCurve variance_curve(const FrechetProblem& p, int m_max) {
  return variance_curve(p, m_max, SolverCaps{});
}

FrechetProblem nonexistence_problem() {
  FrechetProblem p;
  p.space = xor_zero_space();
  p.sample = {TimeSeries::of_reals({1.0, 1.0}), TimeSeries::of_reals({1.0, -1.0})};
  p.losses = {power_loss(1.0, 1.0), power_loss(1.0, 1.0)};
  return p;
}

namespace {

constexpr double kAttainEps = 1e-9;

bool strictly_decreasing(const std::vector<FamilySample>& samples) {
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].value < samples[i - 1].value)) return false;
  return true;
}

double min_value(const std::vector<FamilySample>& samples) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) best = std::min(best, s.value);
  return best;
}

}  // namespace

NonexistenceReport nonexistence_demo(int steps, const DemoGrid& grid) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (grid.denominators.empty())
    throw std::invalid_argument("demo grid needs at least one length");
  const FrechetProblem p = nonexistence_problem();

  NonexistenceReport report;
  // t descends from 1 to 0; the endpoint with the exact gap value is included
  // so attainment at the boundary is visible in the table.
  for (int i = steps; i >= 0; --i) {
    const double t = static_cast<double>(i) / steps;
    report.family_len1.push_back({t, frechet_value(p, TimeSeries::of_reals({t}))});
    report.family_len2.push_back({t, frechet_value(p, TimeSeries::of_reals({1.0, t}))});
  }

  const double inf1 = min_value(report.family_len1);
  const double inf2 = min_value(report.family_len2);
  const bool len2_best = inf2 <= inf1;
  report.best_family = len2_best ? "(1,t)" : "(t)";
  report.family_infimum = len2_best ? inf2 : inf1;
  report.best_family_strictly_decreasing =
      strictly_decreasing(len2_best ? report.family_len2 : report.family_len1);

  // Dense grid sweep, shortest lengths first; ties keep the earlier (hence
  // shorter, then lexicographically smaller) candidate.
  report.grid_minimum = std::numeric_limits<double>::infinity();
  for (std::size_t li = 0; li < grid.denominators.size(); ++li) {
    const int length = static_cast<int>(li) + 1;
    const long long denom = grid.denominators[li];
    if (denom < 1) throw std::invalid_argument("grid denominators must be >= 1");
    const long long values = 2 * denom + 1;

    std::vector<long long> idx(static_cast<std::size_t>(length), 0);  // 0 -> -denom
    std::vector<double> coords(static_cast<std::size_t>(length));
    while (true) {
      for (int i = 0; i < length; ++i)
        coords[i] = static_cast<double>(idx[i] - denom) / static_cast<double>(denom);
      const TimeSeries candidate = TimeSeries::of_reals(coords);
      const double value = frechet_value(p, candidate);
      ++report.grid_candidates;
      if (value < report.grid_minimum - 1e-12) {
        report.grid_minimum = value;
        report.grid_minimizer = candidate;
      }
      int pos = length - 1;
      while (pos >= 0 && idx[pos] + 1 == values) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++idx[pos];
    }
  }

  report.empirical_infimum = std::min(report.family_infimum, report.grid_minimum);
  report.attained_on_grid = report.grid_minimum <= report.empirical_infimum + kAttainEps;
  return report;
}

}  // namespace dtwmean
