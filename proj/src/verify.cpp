#include "dtwmean/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "dtwmean/glue.hpp"
#include "dtwmean/io.hpp"
#include "dtwmean/reduce.hpp"
#include "dtwmean/wgraph.hpp"

namespace dtwmean {

FrechetProblem peak_valley_problem() {
  FrechetProblem p;
  p.space = euclidean_space();
  p.sample = {TimeSeries::of_reals({0.0, 1.0, 0.0}), TimeSeries::of_reals({0.0, -1.0, 0.0})};
  p.losses = {power_loss(1.0, 2.0), power_loss(1.0, 2.0)};
  return p;
}

DtwSpace binary_alphabet_space() {
  return symbolic_space({"a", "b"}, {{0.0, 1.0}, {1.0, 0.0}});
}

namespace verify {

namespace {

// A check body reports a violation by throwing; the harness turns that into
// a failed CheckResult carrying the message.
struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Body>
CheckResult run_check(const std::string& name, Body&& body) {
  CheckResult result;
  result.name = name;
  try {
    result.cases = body();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = e.what();
  }
  return result;
}

[[noreturn]] void violation(const std::string& what, const ordered_json& counterexample) {
  throw Violation(what + ": " + counterexample.dump());
}

TimeSeries random_real_series(std::mt19937_64& rng, int length) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> values(static_cast<std::size_t>(length));
  for (auto& v : values) v = value(rng);
  return TimeSeries::of_reals(std::move(values));
}

ordered_json reals_json(const TimeSeries& x) {
  return series_to_json(AttributeSpace::real(), x);
}

// Random warping path of order m x n: a uniform step walk from (1,1).
WarpingPath random_path(std::mt19937_64& rng, int m, int n) {
  WarpingPath p;
  p.m = m;
  p.n = n;
  int i = 1;
  int j = 1;
  p.points.push_back({1, 1});
  while (i < m || j < n) {
    int choice;
    if (i == m) {
      choice = 1;
    } else if (j == n) {
      choice = 0;
    } else {
      choice = static_cast<int>(rng() % 3);
    }
    if (choice == 0) {
      ++i;
    } else if (choice == 1) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    p.points.push_back({i, j});
  }
  return p;
}

// Definition-level deletion oracle: an edge is removable iff dropping it
// leaves a valid warping graph of the same size.
bool any_edge_removable(const WarpingGraph& g) {
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    WarpingGraph trimmed = g;
    trimmed.edges.erase(trimmed.edges.begin() + static_cast<std::ptrdiff_t>(k));
    if (trimmed.edges.empty()) continue;
    if (!warping_graph_violation(trimmed)) return true;
  }
  return false;
}

std::vector<WarpingGraph> compact_graphs(int m, int n) {
  std::vector<WarpingGraph> out;
  for (const auto& path : enumerate_warping_paths(m, n)) {
    WarpingGraph g = path_to_graph(path);
    if (is_compact(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<TimeSeries> all_symbol_series(int alphabet, int max_len) {
  std::vector<TimeSeries> out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> ids(static_cast<std::size_t>(len), 0);
    while (true) {
      out.push_back(TimeSeries::of_symbols(ids));
      int pos = len - 1;
      while (pos >= 0 && ids[pos] == alphabet - 1) {
        ids[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++ids[pos];
    }
  }
  return out;
}

}  // namespace

CheckResult check_local_distance_axioms(std::uint64_t seed) {
  return run_check("local-distance-axioms", [seed]() -> long long {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(-3.0, 3.0);
    long long cases = 0;

    auto probe = [&](const DtwSpace& space, auto make_attr) {
      for (int it = 0; it < 400; ++it) {
        const Attribute a = make_attr();
        const Attribute b = make_attr();
        const double dab = local_distance(space, a, b);
        const double dba = local_distance(space, b, a);
        const double daa = local_distance(space, a, a);
        ordered_json ce{{"space", static_cast<int>(space.local.kind)}};
        if (dab < 0.0) violation("negative local distance", ce);
        if (daa != 0.0) violation("nonzero distance on the diagonal", ce);
        if (dab != dba) violation("asymmetric local distance", ce);
        ++cases;
      }
    };

    auto real_attr = [&]() -> Attribute {
      // Exact zeros must show up to exercise the gap rule.
      const double v = value(rng);
      return std::abs(v) < 0.3 ? 0.0 : v;
    };
    probe(euclidean_space(), real_attr);
    probe(xor_zero_space(), real_attr);
    probe(norm_space(1.0), real_attr);
    probe(norm_space(3.0), real_attr);

    DtwSpace vec2 = euclidean_space(2);
    probe(vec2, [&]() -> Attribute {
      return std::vector<double>{value(rng), value(rng)};
    });

    DtwSpace table = symbolic_space({"a", "b", "c"},
                                    {{0, 1, 2}, {1, 0, 0.5}, {2, 0.5, 0}});
    probe(table, [&]() -> Attribute { return Symbol{static_cast<int>(rng() % 3)}; });
    return cases;
  });
}

CheckResult check_loss_and_transform_monotonicity(std::uint64_t seed) {
  return run_check("loss-and-transform-monotonicity", [seed]() -> long long {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> weight(0.1, 3.0);
    std::uniform_real_distribution<double> exponent(1.0, 3.0);
    std::uniform_real_distribution<double> arg(0.0, 10.0);
    long long cases = 0;
    for (int it = 0; it < 200; ++it) {
      const LossFunction loss = power_loss(weight(rng), exponent(rng));
      std::vector<double> us(20);
      for (auto& u : us) u = arg(rng);
      std::sort(us.begin(), us.end());
      for (std::size_t i = 1; i < us.size(); ++i) {
        if (loss.apply(us[i - 1]) > loss.apply(us[i]))
          violation("loss not monotone", ordered_json{{"u0", us[i - 1]}, {"u1", us[i]}});
        for (auto t : {MonotoneTransform::identity(), MonotoneTransform::square_root()})
          if (t.apply(us[i - 1]) > t.apply(us[i]))
            violation("transform not monotone", ordered_json{{"u0", us[i - 1]}, {"u1", us[i]}});
        ++cases;
      }
      const LossFunction zero = power_loss(0.0, 1.0);
      if (zero.apply(us.back()) != 0.0)
        violation("zero-weight loss not identically zero", ordered_json{{"u", us.back()}});
    }
    return cases;
  });
}

CheckResult check_delannoy_counts() {
  return run_check("delannoy-path-counts", []() -> long long {
    long long cases = 0;
    const long long squares[] = {1, 3, 13, 63};
    for (int k = 1; k <= 4; ++k)
      if (delannoy_number(k, k) != squares[k - 1])
        violation("square Delannoy number mismatch", ordered_json{{"order", k}});
    if (enumerate_warping_paths(1, 5).size() != 1)
      violation("order 1x5 must have exactly one path", ordered_json{});
    for (int m = 1; m <= 6; ++m) {
      for (int n = 1; n <= 6; ++n) {
        const auto paths = enumerate_warping_paths(m, n);
        if (static_cast<long long>(paths.size()) != delannoy_number(m, n))
          violation("path count disagrees with Delannoy recursion",
                    ordered_json{{"m", m}, {"n", n}, {"count", paths.size()}});
        std::set<std::vector<PathPoint>> unique;
        for (const auto& p : paths) {
          require_valid_path(p);
          unique.insert(p.points);
        }
        if (unique.size() != paths.size())
          violation("duplicate paths in enumeration", ordered_json{{"m", m}, {"n", n}});
        cases += static_cast<long long>(paths.size());
      }
    }
    return cases;
  });
}

CheckResult check_dtw_oracle(std::uint64_t seed, int pairs, int max_len, double tol) {
  return run_check("dtw-oracle-equivalence", [=]() -> long long {
    std::mt19937_64 rng(seed);
    const DtwSpace space = euclidean_space();
    long long cases = 0;
    for (int it = 0; it < pairs; ++it) {
      const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
      const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
      const TimeSeries x = random_real_series(rng, m);
      const TimeSeries y = random_real_series(rng, n);
      const DtwResult fast = dtw_distance(space, x, y);
      const DtwResult slow = dtw_distance_bruteforce(space, x, y);
      const ordered_json ce{{"x", reals_json(x)}, {"y", reals_json(y)}};
      if (std::abs(fast.distance - slow.distance) > tol)
        violation("dynamic program disagrees with enumeration", ce);
      if (warping_path_violation(fast.path))
        violation("optimal path is not a valid warping path", ce);
      if (std::abs(alignment_cost(space, x, y, fast.path) - fast.raw_cost) > tol)
        violation("optimal path does not attain the reported cost", ce);
      if (fast.distance != space.transform.apply(fast.raw_cost))
        violation("distance is not the transformed raw cost", ce);
      const DtwResult reversed = dtw_distance(space, y, x);
      if (std::abs(fast.distance - reversed.distance) > tol)
        violation("dtw distance is not symmetric", ce);
      if (std::abs(dtw_min_cost(space, x, y) - fast.raw_cost) > tol)
        violation("cost-only kernel disagrees with the full dynamic program", ce);
      ++cases;
    }
    return cases;
  });
}

CheckResult check_warping_graph_properties(int max_order) {
  return run_check("warping-graph-properties", [max_order]() -> long long {
    long long cases = 0;
    for (int m = 1; m <= max_order; ++m) {
      for (int n = 1; n <= max_order; ++n) {
        for (const auto& path : enumerate_warping_paths(m, n)) {
          ++cases;
          const WarpingGraph g = path_to_graph(path);
          const ordered_json ce = graph_to_json(g);
          if (warping_graph_violation(g))
            violation("path converts to an invalid graph", ce);
          if (!(graph_to_path(g) == path))
            violation("path/graph round trip failed", ce);

          // Every chain index is covered.
          std::vector<bool> seen_v(static_cast<std::size_t>(m) + 1, false);
          std::vector<bool> seen_w(static_cast<std::size_t>(n) + 1, false);
          for (const auto& e : g.edges) {
            seen_v[e.v] = true;
            seen_w[e.w] = true;
          }
          for (int v = 1; v <= m; ++v)
            if (!seen_v[v]) violation("isolated node in first partition", ce);
          for (int w = 1; w <= n; ++w)
            if (!seen_w[w]) violation("isolated node in second partition", ce);

          // Order preservation over all edge pairs.
          for (std::size_t a = 0; a < g.edges.size(); ++a)
            for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
              const auto& ea = g.edges[a];
              const auto& eb = g.edges[b];
              const bool fwd = ea.v <= eb.v && ea.w <= eb.w;
              const bool bwd = eb.v <= ea.v && eb.w <= ea.w;
              if (!fwd && !bwd) violation("edges cross", ce);
            }

          // The compactness characterization matches the deletion oracle.
          if (is_compact(g) == any_edge_removable(g))
            violation("compactness characterization disagrees with deletion oracle", ce);

          // Neighborhoods are contiguous and their inner nodes have degree 1.
          for (auto part : {Partition::V, Partition::W}) {
            const int count = part == Partition::V ? m : n;
            const auto other = part == Partition::V ? Partition::W : Partition::V;
            for (int node = 1; node <= count; ++node) {
              const auto nbrs = neighborhood(g, part, node);
              if (nbrs.empty()) violation("empty neighborhood", ce);
              if (nbrs.back() - nbrs.front() + 1 != static_cast<int>(nbrs.size()))
                violation("neighborhood is not contiguous", ce);
              for (std::size_t t = 1; t + 1 < nbrs.size(); ++t)
                if (neighborhood(g, other, nbrs[t]).size() != 1)
                  violation("inner neighbor has degree > 1", ce);
            }
          }

          const WarpingGraph compact = compactify(g);
          const ordered_json cce = graph_to_json(compact);
          if (!is_compact(compact)) violation("compactification is not compact", cce);
          if (!(compactify(compact) == compact))
            violation("compactification is not idempotent", cce);
          if (any_edge_removable(compact))
            violation("compactification left a removable edge", cce);
          std::set<std::pair<int, int>> original;
          for (const auto& e : g.edges) original.insert({e.v, e.w});
          for (const auto& e : compact.edges)
            if (!original.count({e.v, e.w}))
              violation("compactification is not a subgraph", cce);

          // Star decomposition covers each node exactly once.
          const auto stars = star_components(compact);
          std::vector<int> cover_v(static_cast<std::size_t>(m) + 1, 0);
          std::vector<int> cover_w(static_cast<std::size_t>(n) + 1, 0);
          int k11 = 0;
          bool has_wide_kr1 = false;
          for (const auto& star : stars) {
            if (star.v_count() < 1 || star.w_count() < 1)
              violation("star component misses a partition", cce);
            auto mark = [&](const NodeRef& node) {
              (node.part == Partition::V ? cover_v : cover_w)[node.index] += 1;
            };
            mark(star.center);
            for (const auto& leaf : star.leaves) mark(leaf);
            if (star.v_count() == 1 && star.w_count() == 1) ++k11;
            if (star.form == StarComponent::Form::KR1 && star.v_count() > 1)
              has_wide_kr1 = true;
          }
          for (int v = 1; v <= m; ++v)
            if (cover_v[v] != 1) violation("star cover misses or repeats a node", cce);
          for (int w = 1; w <= n; ++w)
            if (cover_w[w] != 1) violation("star cover misses or repeats a node", cce);
          if (m > n) {
            if (k11 > n - 1) violation("too many single-edge components", cce);
            if (!has_wide_kr1)
              violation("no component spans several first-partition nodes", cce);
          }

          // Redundant nodes delete cleanly; delete_node revalidates.
          for (int node : redundant_nodes(compact, Partition::V)) {
            const WarpingGraph reduced = delete_node(compact, node);
            if (warping_graph_violation(reduced) || !is_compact(reduced))
              violation("deleting a redundant node broke the graph", cce);
          }
        }
      }
    }
    return cases;
  });
}

CheckResult check_glued_redundancy_exhaustive(int max_m, int max_nk) {
  return run_check("glued-redundancy-exhaustive", [=]() -> long long {
    long long cases = 0;
    for (int m = 1; m <= max_m; ++m) {
      std::vector<std::vector<WarpingGraph>> by_n;
      for (int n = 1; n <= max_nk; ++n) by_n.push_back(compact_graphs(m, n));

      auto probe = [&](std::vector<WarpingGraph> particles) {
        ++cases;
        std::vector<int> lengths;
        for (const auto& particle : particles) lengths.push_back(particle.n);
        const auto bound = reduction_bound_sample(lengths);
        GluedGraph glued = glue(std::move(particles));
        if (reduction_bound(glued).rho != bound.rho)
          violation("glued bound differs from the sample bound",
                    ordered_json{{"lengths", lengths}});
        const auto node = find_redundant_splice_node(glued);
        if (m > bound.rho && !node)
          violation("no redundant splice node above the bound",
                    ordered_json{{"m", m}, {"rho", bound.rho}, {"lengths", lengths}});
        if (node) {
          const GluedGraph reduced = remove_splice_node(glued, *node);
          if (reduced.splice_size != m - 1)
            violation("splice did not shrink", ordered_json{{"m", m}});
          if (reduction_bound(reduced).rho != bound.rho)
            violation("reduction bound changed under node removal",
                      ordered_json{{"m", m}, {"lengths", lengths}});
        }
      };

      for (int n1 = 1; n1 <= max_nk; ++n1) {
        for (const auto& g1 : by_n[n1 - 1]) {
          probe({g1});
          for (int n2 = 1; n2 <= max_nk; ++n2)
            for (const auto& g2 : by_n[n2 - 1]) probe({g1, g2});
        }
      }
    }
    return cases;
  });
}

CheckResult check_glued_redundancy_random(std::uint64_t seed, int cases) {
  return run_check("glued-redundancy-random", [=]() -> long long {
    std::mt19937_64 rng(seed);
    long long done = 0;
    for (int it = 0; it < cases; ++it) {
      const int m = 2 + static_cast<int>(rng() % 9);  // 2..10
      const int n_particles = 1 + static_cast<int>(rng() % 4);
      std::vector<WarpingGraph> particles;
      std::vector<int> lengths;
      for (int k = 0; k < n_particles; ++k) {
        const int n = 1 + static_cast<int>(rng() % 5);
        lengths.push_back(n);
        particles.push_back(compactify(path_to_graph(random_path(rng, m, n))));
      }
      const auto bound = reduction_bound_sample(lengths);
      GluedGraph glued = glue(std::move(particles));
      const auto node = find_redundant_splice_node(glued);
      if (m > bound.rho && !node)
        violation("no redundant splice node above the bound",
                  ordered_json{{"m", m}, {"rho", bound.rho}, {"lengths", lengths}});
      if (node) remove_splice_node(glued, *node);  // revalidates internally
      ++done;
    }
    return done;
  });
}

CheckResult check_reduction_bound_values() {
  return run_check("reduction-bound-values", []() -> long long {
    auto expect = [](const std::vector<int>& lengths, long long rho) {
      const auto r = reduction_bound_sample(lengths);
      if (r.rho != rho)
        violation("wrong reduction bound",
                  ordered_json{{"lengths", lengths}, {"rho", r.rho}, {"expected", rho}});
    };
    expect({4, 4}, 6);
    expect({3, 3}, 4);
    expect({1, 1, 1}, 1);
    expect({1, 3}, 3);
    expect({2}, 2);
    expect({1}, 1);

    const auto r = reduction_bound_sample({1, 3});
    if (r.core != std::vector<int>{2} || r.trivial_count != 1)
      violation("wrong core set for a sample with a trivial series",
                ordered_json{{"core", r.core}});

    // Adding a non-trivial series to a non-empty core grows the bound by
    // its length minus two.
    std::mt19937_64 rng(7);
    long long cases = 7;
    for (int it = 0; it < 200; ++it) {
      std::vector<int> lengths;
      const int n_series = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < n_series; ++k) lengths.push_back(1 + static_cast<int>(rng() % 5));
      const auto before = reduction_bound_sample(lengths);
      const int extra = 2 + static_cast<int>(rng() % 4);
      lengths.push_back(extra);
      const auto after = reduction_bound_sample(lengths);
      const long long expected =
          before.core.empty() ? extra : before.rho + extra - 2;
      if (after.rho != expected)
        violation("bound growth mismatch", ordered_json{{"lengths", lengths}});
      ++cases;
    }
    return cases;
  });
}

CheckResult check_reduction_alphabet_exhaustive() {
  return run_check("reduction-guarantee-alphabet-exhaustive", []() -> long long {
    const DtwSpace space = binary_alphabet_space();
    const auto series = all_symbol_series(2, 3);       // sample series, n_k <= 3
    const auto candidates = all_symbol_series(2, 7);   // candidate lengths <= 7
    long long cases = 0;
    for (const auto& s1 : series) {
      for (const auto& s2 : series) {
        FrechetProblem p{space, {s1, s2}, {power_loss(1.0, 1.0), power_loss(1.0, 1.0)}};
        const long long rho = reduction_bound_sample(p.lengths()).rho;
        for (const auto& x : candidates) {
          ++cases;
          const auto step = reduce_once(p, x);  // asserts F monotonicity internally
          if (x.length() > rho) {
            if (!step)
              violation("reduction missing above the bound",
                        ordered_json{{"sample",
                                      {series_to_json(space.attributes, s1),
                                       series_to_json(space.attributes, s2)}},
                                     {"candidate", series_to_json(space.attributes, x)},
                                     {"rho", rho}});
            else if (step->second.f_after > step->second.f_before + 1e-9)
              violation("Frechet value increased", ordered_json{{"rho", rho}});
          }
        }
      }
    }
    return cases;
  });
}

CheckResult check_reduction_euclidean_fuzz(std::uint64_t seed, int cases) {
  return run_check("reduction-guarantee-euclidean-fuzz", [=]() -> long long {
    std::mt19937_64 rng(seed);
    const DtwSpace space = euclidean_space();
    long long done = 0;
    for (int it = 0; it < cases; ++it) {
      FrechetProblem p;
      p.space = space;
      const int n_series = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < n_series; ++k) {
        p.sample.push_back(random_real_series(rng, 1 + static_cast<int>(rng() % 4)));
        p.losses.push_back(power_loss(1.0, 2.0));
      }
      const long long rho = reduction_bound_sample(p.lengths()).rho;
      const int excess = 1 + static_cast<int>(rng() % 3);
      const TimeSeries x = random_real_series(rng, static_cast<int>(rho) + excess);

      const auto step = reduce_once(p, x);
      ordered_json ce{{"candidate", reals_json(x)}, {"rho", rho}};
      if (!step) violation("reduction missing above the bound", ce);
      if (step->second.f_after > step->second.f_before + 1e-9)
        violation("Frechet value increased", ce);
      if (step->first.length() != x.length() - 1)
        violation("reduction did not shorten by one", ce);

      const auto [final_series, steps] = reduce_to_bound(p, x);
      if (final_series.length() > rho) violation("final length above the bound", ce);
      if (static_cast<int>(steps.size()) < excess)
        violation("fewer steps than the length excess", ce);
      double previous = frechet_value(p, x);
      for (const auto& s : steps) {
        if (s.f_after > previous + 1e-9) violation("step log is not monotone", ce);
        previous = s.f_after;
      }
      ++done;
    }
    return done;
  });
}

CheckResult check_euclidean_solver_oracle() {
  return run_check("euclidean-solver-oracle", []() -> long long {
    const FrechetProblem p = peak_valley_problem();
    long long cases = 0;

    // Independent dense-grid oracles. Step 1/24 keeps the length-3 minimizer
    // (-1/3, 1/2, 0) on the grid; step 1/8 suffices for the length-4
    // minimizers (0, +-1/2, -+1/2, 0).
    std::vector<double> grid24;
    for (int k = -24; k <= 24; ++k) grid24.push_back(k / 24.0);
    std::vector<double> grid8;
    for (int k = -8; k <= 8; ++k) grid8.push_back(k / 8.0);
    SolverCaps grid_caps;
    grid_caps.max_configurations = 200'000;

    const double grid3 = restricted_mean_grid(p, 3, grid24, grid_caps).value;
    const double grid4 = restricted_mean_grid(p, 4, grid8, grid_caps).value;
    const MeanResult exact3 = restricted_mean_euclidean(p, 3);
    const MeanResult exact4 = restricted_mean_euclidean(p, 4);
    cases += 4;

    if (std::abs(exact3.value - 7.0 / 12.0) > 1e-9 || std::abs(grid3 - 7.0 / 12.0) > 1e-9)
      violation("restricted variance at length 3 is not 7/12",
                ordered_json{{"solver", exact3.value}, {"grid", grid3}});
    if (std::abs(exact4.value - 0.5) > 1e-9 || std::abs(grid4 - 0.5) > 1e-9)
      violation("restricted variance at length 4 is not 0.5",
                ordered_json{{"solver", exact4.value}, {"grid", grid4}});

    // The length-4 mean set contains (0, 1/2, -1/2, 0) and its sign flip;
    // the tie-break picks the lexicographically smaller one.
    if (std::abs(frechet_value(p, TimeSeries::of_reals({0.0, 0.5, -0.5, 0.0})) - 0.5) > 1e-9)
      violation("(0, 1/2, -1/2, 0) does not attain 0.5", ordered_json{});
    const TimeSeries expected4 = TimeSeries::of_reals({0.0, -0.5, 0.5, 0.0});
    for (int i = 0; i < 4; ++i) {
      const double got = std::get<double>(exact4.minimizer.elements[i]);
      const double want = std::get<double>(expected4.elements[i]);
      if (std::abs(got - want) > 1e-9)
        violation("length-4 minimizer mismatch", reals_json(exact4.minimizer));
    }

    // The quadratic of the winning path combination is flat at the solver's
    // minimizer: central finite differences per coordinate.
    auto combination_cost = [&](const std::vector<double>& flat) {
      double acc = 0.0;
      for (int k = 0; k < p.size(); ++k) {
        double series_cost = 0.0;
        for (const auto& pt : exact4.paths[k].points) {
          const double diff =
              flat[pt.i - 1] - std::get<double>(p.sample[k].elements[pt.j - 1]);
          series_cost += diff * diff;
        }
        acc += p.losses[k].weight * series_cost;
      }
      return acc / p.size();
    };
    std::vector<double> flat;
    for (const auto& a : exact4.minimizer.elements) flat.push_back(std::get<double>(a));
    const double h = 1e-5;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      std::vector<double> hi = flat;
      std::vector<double> lo = flat;
      hi[i] += h;
      lo[i] -= h;
      const double gradient = (combination_cost(hi) - combination_cost(lo)) / (2 * h);
      if (std::abs(gradient) > 1e-8)
        violation("nonzero gradient at the quadratic minimizer",
                  ordered_json{{"coordinate", i}, {"gradient", gradient}});
      ++cases;
    }

    // A single-series problem is minimized by the series itself.
    FrechetProblem single{euclidean_space(),
                          {TimeSeries::of_reals({0.25, -0.75, 0.5})},
                          {power_loss(1.0, 2.0)}};
    const MeanResult own = restricted_mean_euclidean(single, 3);
    if (own.value > 1e-12 || !series_equal(own.minimizer, single.sample[0]))
      violation("single-series mean is not the series itself", reals_json(own.minimizer));
    ++cases;
    return cases;
  });
}

CheckResult check_variance_curve_fixture() {
  return run_check("variance-curve-fixture", []() -> long long {
    const FrechetProblem p = peak_valley_problem();
    const VarianceCurve curve = variance_curve(p, 6);
    const double expected[] = {1.0, 2.0 / 3.0, 7.0 / 12.0, 0.5, 0.5, 0.5};
    for (int m = 1; m <= 6; ++m)
      if (std::abs(curve.f_star[m - 1] - expected[m - 1]) > 1e-9)
        violation("restricted variance mismatch",
                  ordered_json{{"m", m}, {"value", curve.f_star[m - 1]}});
    if (curve.argmin_length() != 4)
      violation("variance curve argmin is not 4",
                ordered_json{{"argmin", curve.argmin_length()}});
    for (std::size_t i = 0; i < curve.f_star.size(); ++i) {
      if (curve.f_star[3] > curve.f_star[i] + 1e-9)
        violation("length 4 does not minimize the curve",
                  ordered_json{{"m", i + 1}, {"value", curve.f_star[i]}});
      if (i > 0 && curve.running_min[i] > curve.running_min[i - 1] + 1e-15)
        violation("running minima increased", ordered_json{{"m", i + 1}});
      if (i >= 3 && std::abs(curve.running_min[i] - 0.5) > 1e-6)
        violation("running minimum does not stabilize at 0.5",
                  ordered_json{{"m", i + 1}});
    }

    FrechetProblem single{euclidean_space(),
                          {TimeSeries::of_reals({0.5, -1.0, 0.25})},
                          {power_loss(1.0, 2.0)}};
    const VarianceCurve sc = variance_curve(single, 4);
    if (sc.f_star[2] > 1e-12)
      violation("single-series curve does not reach zero at the series length",
                ordered_json{{"value", sc.f_star[2]}});
    return static_cast<long long>(curve.f_star.size() + sc.f_star.size());
  });
}

CheckResult check_unrestricted_certificate(std::uint64_t seed) {
  return run_check("unrestricted-certificate", [seed]() -> long long {
    long long cases = 0;
    SolverCaps caps;

    auto certify = [&](const FrechetProblem& p) {
      const auto bound = reduction_bound_sample(p.lengths());
      const MeanResult best = unrestricted_mean(p, caps);
      for (int m = 1; m <= static_cast<int>(bound.rho) + 2; ++m) {
        const double value = restricted_mean(p, m, caps).value;
        if (value < best.value - 1e-9)
          violation("a longer candidate beat the bounded sweep",
                    ordered_json{{"m", m}, {"value", value}, {"best", best.value}});
      }
      ++cases;
    };

    certify(peak_valley_problem());

    const DtwSpace alpha = binary_alphabet_space();
    FrechetProblem fixed{alpha,
                         {TimeSeries::of_symbols({0, 1, 0}), TimeSeries::of_symbols({1, 0})},
                         {power_loss(1.0, 1.0), power_loss(1.0, 1.0)}};
    certify(fixed);

    std::mt19937_64 rng(seed);
    for (int it = 0; it < 20; ++it) {
      FrechetProblem p;
      p.space = alpha;
      const int n_series = 1 + static_cast<int>(rng() % 2);
      for (int k = 0; k < n_series; ++k) {
        const int len = 1 + static_cast<int>(rng() % 3);
        std::vector<int> ids(static_cast<std::size_t>(len));
        for (auto& id : ids) id = static_cast<int>(rng() % 2);
        p.sample.push_back(TimeSeries::of_symbols(ids));
        p.losses.push_back(power_loss(1.0, 1.0 + static_cast<double>(rng() % 2)));
      }
      certify(p);
    }

    // The trivial sample {x} is its own mean after sweeping up to its length.
    FrechetProblem single{euclidean_space(),
                          {TimeSeries::of_reals({0.5, 0.25, -0.5})},
                          {power_loss(1.0, 2.0)}};
    const MeanResult own = unrestricted_mean(single, caps);
    if (own.value > 1e-12 || own.length != 3)
      violation("single-series unrestricted mean is not the series",
                ordered_json{{"length", own.length}, {"value", own.value}});
    ++cases;
    return cases;
  });
}

CheckResult check_zero_weight_equivalence(std::uint64_t seed) {
  return run_check("zero-weight-equivalence", [seed]() -> long long {
    std::mt19937_64 rng(seed);
    long long cases = 0;
    for (int it = 0; it < 50; ++it) {
      FrechetProblem full;
      full.space = euclidean_space();
      const int n_series = 3;
      for (int k = 0; k < n_series; ++k) {
        full.sample.push_back(random_real_series(rng, 2 + static_cast<int>(rng() % 2)));
        full.losses.push_back(power_loss(1.0, 2.0));
      }
      full.losses[2] = power_loss(0.0, 2.0);

      // Dropping a zero-weight series changes the 1/N normalization, so the
      // remaining weights are rescaled by N/(N-1) to keep F pointwise equal.
      FrechetProblem dropped;
      dropped.space = full.space;
      for (int k = 0; k < 2; ++k) {
        dropped.sample.push_back(full.sample[k]);
        dropped.losses.push_back(power_loss(
            full.losses[k].weight * (n_series - 1) / n_series, full.losses[k].exponent));
      }

      for (int probe = 0; probe < 10; ++probe) {
        const TimeSeries x = random_real_series(rng, 1 + static_cast<int>(rng() % 5));
        if (std::abs(frechet_value(full, x) - frechet_value(dropped, x)) > 1e-9)
          violation("zero-weight series changed the Frechet value", reals_json(x));
        ++cases;
      }

      const MeanResult a = unrestricted_mean(full);
      const MeanResult b = unrestricted_mean(dropped);
      if (std::abs(a.value - b.value) > 1e-9)
        violation("zero-weight series changed the mean value",
                  ordered_json{{"with", a.value}, {"without", b.value}});
      ++cases;
    }
    return cases;
  });
}

CheckResult check_alphabet_solver_reenumeration(std::uint64_t seed) {
  return run_check("alphabet-solver-reenumeration", [seed]() -> long long {
    const DtwSpace space = binary_alphabet_space();
    FrechetProblem p{space,
                     {TimeSeries::of_symbols({0, 0}), TimeSeries::of_symbols({1, 1})},
                     {power_loss(1.0, 1.0), power_loss(1.0, 1.0)}};
    const MeanResult solved = restricted_mean_alphabet(p, 2);

    // Independent oracle: same candidates in a shuffled order.
    std::vector<TimeSeries> candidates;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) candidates.push_back(TimeSeries::of_symbols({a, b}));
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    double oracle = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) oracle = std::min(oracle, frechet_value(p, c));

    if (std::abs(solved.value - oracle) > 1e-12)
      violation("shuffled re-enumeration found a different value",
                ordered_json{{"solver", solved.value}, {"oracle", oracle}});
    if (std::abs(solved.value - 1.0) > 1e-12)
      violation("fixture value is not 1", ordered_json{{"value", solved.value}});
    if (!series_equal(solved.minimizer, TimeSeries::of_symbols({0, 0})))
      violation("tie-break is not lexicographic",
                series_to_json(space.attributes, solved.minimizer));

    // Candidate count |alphabet|^m.
    const DtwSpace three = symbolic_space({"a", "b", "c"},
                                          {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    FrechetProblem q{three, {TimeSeries::of_symbols({0, 1, 2})}, {power_loss(1.0, 1.0)}};
    const MeanResult r = restricted_mean_alphabet(q, 3);
    if (r.configurations != 27)
      violation("candidate count is not |alphabet|^m",
                ordered_json{{"configurations", r.configurations}});
    if (r.value > 1e-12)
      violation("sample series is not its own mean", ordered_json{{"value", r.value}});
    return 6;
  });
}

CheckResult check_nonexistence_family(const DemoGrid& grid) {
  return run_check("nonexistence-demo-families", [&grid]() -> long long {
    const FrechetProblem p = nonexistence_problem();
    if (std::abs(frechet_value(p, TimeSeries::of_reals({1.0, 1.0})) - 2.0) > 1e-12)
      violation("F(1,1) is not 2", ordered_json{});
    if (std::abs(frechet_value(p, TimeSeries::of_reals({1.0, 0.0})) - 1.0) > 1e-12)
      violation("F(1,0) is not 1", ordered_json{});

    const NonexistenceReport report = nonexistence_demo(200, grid);
    if (report.best_family != "(1,t)")
      violation("best family is not the length-2 family",
                ordered_json{{"family", report.best_family}});
    if (!report.best_family_strictly_decreasing)
      violation("best family is not strictly decreasing", ordered_json{});
    if (std::abs(report.family_infimum - 1.0) > 1e-9)
      violation("family infimum is not 1",
                ordered_json{{"infimum", report.family_infimum}});
    if (report.grid_minimum < report.empirical_infimum - 1e-12)
      violation("grid minimum below the reported infimum", ordered_json{});
    if (std::abs(frechet_value(p, report.grid_minimizer) - report.grid_minimum) > 1e-12)
      violation("grid minimizer does not evaluate to the grid minimum", ordered_json{});
    return static_cast<long long>(report.family_len1.size() + report.family_len2.size()) +
           report.grid_candidates;
  });
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
  std::vector<CheckResult> results;
  results.push_back(check_local_distance_axioms(seed));
  results.push_back(check_loss_and_transform_monotonicity(seed + 1));
  results.push_back(check_delannoy_counts());
  results.push_back(check_dtw_oracle(seed + 2, 500, 5, 1e-12));
  results.push_back(check_dtw_oracle(seed + 3, 1000, 6, 1e-9));
  results.push_back(check_warping_graph_properties(5));
  results.push_back(check_glued_redundancy_exhaustive(7, 3));
  results.push_back(check_glued_redundancy_random(seed + 4, 1000));
  results.push_back(check_reduction_bound_values());
  results.push_back(check_reduction_alphabet_exhaustive());
  results.push_back(check_reduction_euclidean_fuzz(seed + 5, 1000));
  results.push_back(check_euclidean_solver_oracle());
  results.push_back(check_variance_curve_fixture());
  results.push_back(check_unrestricted_certificate(seed + 6));
  results.push_back(check_zero_weight_equivalence(seed + 7));
  results.push_back(check_alphabet_solver_reenumeration(seed + 8));
  results.push_back(check_nonexistence_family(DemoGrid{{100, 100, 20}}));
  return results;
}

}  // namespace verify

}  // namespace dtwmean
