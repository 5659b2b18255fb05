#include "migraph/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "migraph/errors.hpp"
#include "migraph/strategy.hpp"

namespace migraph {

double round2(double x) {
    return static_cast<double>(std::llround(x * 100.0)) / 100.0;
}

std::string format2(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", round2(x));
    return buf;
}

ComparisonReport compare_report(const MigrationGraph& g) {
    const long long n = static_cast<long long>(g.node_count());
    if (n < 1) throw OutOfRange("comparison report needs a non-empty graph");

    CondensationGraph cg = condensation(g);
    const long long k = static_cast<long long>(cg.cluster_count());
    double mean_size = static_cast<double>(n) / static_cast<double>(k);
    double size_sd = 0.0;
    if (k > 1) {
        double ss = 0.0;
        for (const MigrationCluster& c : cg.clusters) {
            double d = static_cast<double>(c.size()) - mean_size;
            ss += d * d;
        }
        size_sd = std::sqrt(ss / static_cast<double>(k - 1));
    }
    int depth = 0;
    for (int t : cg.times) depth = std::max(depth, t);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    ClusterStatistics expected;
    bool have_expected = n >= 2;
    if (have_expected) expected = expected_stats(n);

    ComparisonReport report;
    report.n = n;
    report.rows = {
        {"Cluster size", "ln n", have_expected ? expected.expected_cluster_size : nan, mean_size,
         false},
        {"Cluster count", "n / ln n", have_expected ? expected.expected_cluster_count : nan,
         static_cast<double>(k), true},
        {"Std. dev.", "sqrt(n) / ln n", have_expected ? expected.cluster_count_sd : nan, size_sd,
         false},
        {"Migration depth (optim.)", "sqrt(n)", have_expected ? expected.depth_optimistic : nan,
         static_cast<double>(depth), true},
        {"Migration depth (cons.)", "n / ln^2 n", have_expected ? expected.depth_conservative : nan,
         static_cast<double>(depth), true},
    };
    return report;
}

std::string render_comparison(const ComparisonReport& report) {
    std::ostringstream out;
    out << "metric                    | formula        | expected | observed\n";
    for (const ComparisonRow& row : report.rows) {
        char line[160];
        std::string expected = std::isnan(row.expected) ? "-" : format2(row.expected);
        std::string observed;
        if (row.observed_integral) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%lld", std::llround(row.observed));
            observed = buf;
        } else {
            observed = format2(row.observed);
        }
        std::snprintf(line, sizeof line, "%-25s | %-14s | %8s | %s\n", row.metric.c_str(),
                      row.formula.c_str(), expected.c_str(), observed.c_str());
        out << line;
    }
    return out.str();
}

std::string table1_row(long long n) {
    ClusterStatistics stats = expected_stats(n);
    std::ostringstream out;
    out << n << " | " << std::llround(stats.expected_cluster_size) << " | "
        << std::llround(stats.expected_cluster_count) << " | "
        << std::llround(stats.cluster_count_sd) << " | "
        << std::llround(stats.depth_conservative) << " | "
        << std::llround(stats.depth_optimistic);
    return out.str();
}

std::string render_table1(const std::vector<long long>& ns) {
    std::ostringstream out;
    out << "n | size | count | sd | depth(cons) | depth(optim)\n";
    for (long long n : ns) out << table1_row(n) << "\n";
    return out.str();
}

}  // namespace migraph
