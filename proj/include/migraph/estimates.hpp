#pragma once

#include <cstdint>
#include <optional>

namespace migraph {

// Theoretical cluster metrics for a random n-component project, with optional
// observed counterparts. All logarithms are natural.
struct ClusterStatistics {
    long long n = 0;
    double expected_cluster_size = 0;   // ln n
    double expected_cluster_count = 0;  // n / ln n
    double cluster_count_sd = 0;        // sqrt(n) / ln n
    double depth_conservative = 0;      // n / ln^2 n
    double depth_optimistic = 0;        // sqrt(n)

    std::optional<double> observed_cluster_count;  // mean over trials when sampled
    std::optional<double> observed_count_sd;
    std::optional<double> observed_mean_size;
    std::optional<double> observed_size_sd;
    std::optional<long long> observed_depth;
    bool low_sample = false;  // single-trial standard deviations are reported as 0
};

// Expected columns only. OutOfRange for n < 2.
ClusterStatistics expected_stats(long long n);

// Upper bound on the expected maximum cluster count over s projects:
// n/ln n + sqrt(2 n ln s)/ln n. OutOfRange for n < 2 or s < 1.
double max_clusters_bound(long long n, double s);

// Root r of r e^r = n, to 1e-12.
double solve_cluster_rate(double n);

// e r - ln sqrt(r) with r e^r = n. OutOfRange for n < e.
double expected_max_cluster_size(double n);

// Limit probability exp(-exp(-c)) that the block-level graph is connected.
double connectivity_probability(double c);

// Depth-width trade-off d >= n'/w. OutOfRange for n' < 1 or w <= 0.
double depth_lower_bound(long long n_prime, double w);

// Samples `trials` uniform partitions of n and fills the observed block-count
// mean/SD and mean block size next to the expected columns. Deterministic
// under seed; trials run on derived per-trial sub-seeds.
ClusterStatistics monte_carlo_report(int n, long long trials, std::uint64_t seed);

}  // namespace migraph
