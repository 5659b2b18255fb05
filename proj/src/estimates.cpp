#include "migraph/estimates.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "migraph/errors.hpp"
#include "migraph/rng.hpp"
#include "migraph/sampling.hpp"

namespace migraph {

ClusterStatistics expected_stats(long long n) {
    if (n < 2) throw OutOfRange("expected_stats requires n >= 2, got " + std::to_string(n));
    const double nd = static_cast<double>(n);
    const double ln = std::log(nd);
    ClusterStatistics stats;
    stats.n = n;
    stats.expected_cluster_size = ln;
    stats.expected_cluster_count = nd / ln;
    stats.cluster_count_sd = std::sqrt(nd) / ln;
    stats.depth_conservative = nd / (ln * ln);
    stats.depth_optimistic = std::sqrt(nd);
    return stats;
}

double max_clusters_bound(long long n, double s) {
    if (n < 2) throw OutOfRange("max_clusters_bound requires n >= 2");
    if (s < 1.0) throw OutOfRange("max_clusters_bound requires s >= 1");
    const double nd = static_cast<double>(n);
    const double ln = std::log(nd);
    return nd / ln + std::sqrt(2.0 * nd * std::log(s)) / ln;
}

double solve_cluster_rate(double n) {
    if (!(n > 0.0)) throw OutOfRange("cluster rate defined for n > 0");
    // r e^r is strictly increasing; bisect [0, max(1, ln n)] to 1e-12.
    double lo = 0.0;
    double hi = std::max(1.0, std::log(n));
    while (hi * std::exp(hi) < n) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid * std::exp(mid) < n)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12) break;
    }
    double r = 0.5 * (lo + hi);
    if (std::abs(r * std::exp(r) - n) > 1e-9 * std::max(1.0, n))
        throw NoConvergence("root of r e^r = n did not converge");
    return r;
}

double expected_max_cluster_size(double n) {
    const double e = std::exp(1.0);
    if (!(n >= e)) throw OutOfRange("expected_max_cluster_size requires n >= e");
    double r = solve_cluster_rate(n);
    return e * r - 0.5 * std::log(r);
}

double connectivity_probability(double c) {
    return std::exp(-std::exp(-c));
}

double depth_lower_bound(long long n_prime, double w) {
    if (n_prime < 1) throw OutOfRange("depth_lower_bound requires n' >= 1");
    if (!(w > 0.0)) throw OutOfRange("depth_lower_bound requires w > 0");
    return static_cast<double>(n_prime) / w;
}

ClusterStatistics monte_carlo_report(int n, long long trials, std::uint64_t seed) {
    if (n < 2) throw OutOfRange("monte_carlo_report requires n >= 2");
    if (trials < 1) throw OutOfRange("monte_carlo_report requires trials >= 1");

    ClusterStatistics stats = expected_stats(n);
    BlockCountSampler sampler(n);
    std::vector<long long> counts;
    counts.reserve(trials);
    double size_sum = 0.0;
    for (long long t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        int k = sample_partition_block_count(sampler, n, rng);
        counts.push_back(k);
        size_sum += static_cast<double>(n) / k;
    }

    double mean = 0.0;
    for (long long k : counts) mean += static_cast<double>(k);
    mean /= static_cast<double>(trials);
    double sd = 0.0;
    if (trials > 1) {
        double ss = 0.0;
        for (long long k : counts) {
            double d = static_cast<double>(k) - mean;
            ss += d * d;
        }
        sd = std::sqrt(ss / static_cast<double>(trials - 1));
    } else {
        stats.low_sample = true;
    }

    stats.observed_cluster_count = mean;
    stats.observed_count_sd = sd;
    stats.observed_mean_size = size_sum / static_cast<double>(trials);
    return stats;
}

}  // namespace migraph
