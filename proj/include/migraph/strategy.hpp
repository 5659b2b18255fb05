#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "migraph/bigint.hpp"
#include "migraph/graph.hpp"

namespace migraph {

// Ordered migration picks. A pick stands for its whole cluster, so two
// strategies naming different members of the same cluster at the same step
// are equivalent.
struct Strategy {
    std::vector<std::string> picks;

    std::size_t length() const { return picks.size(); }
};

struct ReasonableCheck {
    bool reasonable = true;
    // Index of the first pick that was present but not migratable; -1 if none.
    std::ptrdiff_t violation_index = -1;
};

// Simulates the picks in order. Throws UnknownComponent when a pick is absent
// from the residual graph at its step.
ReasonableCheck is_reasonable(const MigrationGraph& g, const Strategy& s);

// True when sequentially applying the picks empties the graph. Non-migratable
// picks leave the residual graph unchanged.
bool is_successful(const MigrationGraph& g, const Strategy& s);

// Number of migration clusters; the length of every reasonable successful
// strategy.
std::size_t migration_length(const MigrationGraph& g);

// Clusters with their canonical migration times, in canonical cluster order.
std::vector<std::pair<MigrationCluster, int>> canonical_times(const MigrationGraph& g);

// Level sets T(1)..T(d) with the exact count of canonical strategies.
struct CanonicalPlan {
    std::vector<std::vector<MigrationCluster>> levels;  // levels[k-1] = T(k)
    std::size_t depth = 0;
    std::size_t length = 0;
    BigInt strategy_count = 1;  // product over levels of |T(k)|!
};

CanonicalPlan canonical_plan(const MigrationGraph& g);

// Largest canonical migration time; 0 for the empty graph.
std::size_t migration_depth(const MigrationGraph& g);

// Largest level-set size; 0 for the empty graph.
std::size_t level_width(const MigrationGraph& g);

// Every reasonable successful strategy, one representative pick (smallest
// member id) per cluster, in lexicographic backtracking order. Throws
// TooLarge once more than `limit` strategies exist.
std::vector<Strategy> enumerate_reasonable_successful(const MigrationGraph& g,
                                                      std::uint64_t limit);

// One uniformly seeded reasonable successful strategy: repeatedly picks a
// random currently-migratable cluster and a random member of it.
Strategy random_strategy(const MigrationGraph& g, std::uint64_t seed);

}  // namespace migraph
