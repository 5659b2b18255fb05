#pragma once

#include <string>
#include <vector>

#include "migraph/estimates.hpp"
#include "migraph/graph.hpp"

namespace migraph {

struct ComparisonRow {
    std::string metric;
    std::string formula;
    double expected = 0;        // NaN when no prediction applies (n = 1)
    double observed = 0;
    bool observed_integral = false;  // render observed as an integer
};

// The five-metric prediction-vs-measurement table for one graph.
struct ComparisonReport {
    long long n = 0;
    std::vector<ComparisonRow> rows;
};

// Expected columns from expected_stats(n); observed from the graph's cluster
// structure (sizes use the sample standard deviation, depth fills both depth
// rows). n = 1 is reported with empty expected cells; OutOfRange only for the
// empty graph.
ComparisonReport compare_report(const MigrationGraph& g);

// Half-away-from-zero to two decimals.
double round2(double x);

// Two-decimal string; integral values keep their trailing zeros ("8.00").
std::string format2(double x);

// Aligned text table; expected cells render "-" when NaN, observed integral
// cells render without decimals.
std::string render_comparison(const ComparisonReport& report);

// "1000 | 7 | 145 | 5 | 21 | 32" (n, size, count, sd, conservative and
// optimistic depth, all half-away-from-zero rounded).
std::string table1_row(long long n);

// Header plus one row per n.
std::string render_table1(const std::vector<long long>& ns);

}  // namespace migraph
