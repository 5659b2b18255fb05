#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "migraph/combinatorics.hpp"
#include "migraph/graph.hpp"

namespace migraph {

enum class IntraClusterStyle { cycle };

struct RandomGraphParams {
    int n = 1;
    double c = 0.0;
    std::uint64_t seed = 0;
    IntraClusterStyle intra_cluster_style = IntraClusterStyle::cycle;
};

struct SynthesisResult {
    MigrationGraph graph;
    Partition partition;           // sampled blocks over {1..n}
    std::vector<std::string> ids;  // ids[i] is the component for ground-set item i+1
};

// Random migration graph with known cluster structure:
//   1. sample a uniform set partition of n components,
//   2. realize each block of size >= 2 as one directed cycle over a seeded
//      random member order,
//   3. draw a random linear order on blocks and keep each order-respecting
//      block pair with p = (ln m + c) / m (m = block count), realized as a
//      single edge between seeded random representatives.
// The output's migration clusters recover the sampled blocks exactly.
SynthesisResult synthesize_with_partition(const RandomGraphParams& params);
MigrationGraph synthesize_migration_graph(const RandomGraphParams& params);

// Erdos-Renyi digraph on a seeded random linear order: each order-respecting
// arc is present independently with p = (ln n + c) / n. Acyclic by
// construction, so every cluster is a singleton.
MigrationGraph sample_er_dag(int n, double c, std::uint64_t seed);

}  // namespace migraph
