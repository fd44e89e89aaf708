#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtwmean/frechet.hpp"
#include "dtwmean/solver.hpp"

namespace dtwmean {

struct CheckResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string detail;  // counterexample or failure description
};

// Shared fixtures.

/// Two length-3 series, one with a peak and one with a valley, over the
/// euclidean DTW space with quadratic unit-weight losses. Its restricted
/// variances for lengths 1..4 are 1, 2/3, 7/12 and 1/2; the length-4 value is
/// attained by (0, +-1/2, -+1/2, 0) and the reduction bound is 4.
FrechetProblem peak_valley_problem();

/// Binary alphabet {"a","b"} with the 0/1 distance table and the identity
/// transform.
DtwSpace binary_alphabet_space();

namespace verify {

CheckResult check_local_distance_axioms(std::uint64_t seed);
CheckResult check_loss_and_transform_monotonicity(std::uint64_t seed);
CheckResult check_delannoy_counts();
CheckResult check_dtw_oracle(std::uint64_t seed, int pairs, int max_len, double tol);
CheckResult check_warping_graph_properties(int max_order);
CheckResult check_glued_redundancy_exhaustive(int max_m, int max_nk);
CheckResult check_glued_redundancy_random(std::uint64_t seed, int cases);
CheckResult check_reduction_bound_values();
CheckResult check_reduction_alphabet_exhaustive();
CheckResult check_reduction_euclidean_fuzz(std::uint64_t seed, int cases);
CheckResult check_euclidean_solver_oracle();
CheckResult check_variance_curve_fixture();
CheckResult check_unrestricted_certificate(std::uint64_t seed);
CheckResult check_zero_weight_equivalence(std::uint64_t seed);
CheckResult check_alphabet_solver_reenumeration(std::uint64_t seed);
CheckResult check_nonexistence_family(const DemoGrid& grid);

/// The full invariant suite behind the verify command.
std::vector<CheckResult> run_all_checks(std::uint64_t seed);

}  // namespace verify

}  // namespace dtwmean
