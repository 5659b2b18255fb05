#include "migraph/strategy.hpp"

#include <algorithm>
#include <string>

#include "migraph/errors.hpp"
#include "migraph/rng.hpp"

namespace migraph {

ReasonableCheck is_reasonable(const MigrationGraph& g, const Strategy& s) {
    MigrationGraph residual = g;
    for (std::size_t i = 0; i < s.picks.size(); ++i) {
        const std::string& pick = s.picks[i];
        if (!residual.contains(pick))
            throw UnknownComponent("pick " + std::to_string(i) + " ('" + pick +
                                   "') is not in the residual graph");
        if (migratable_set(residual, pick).empty())
            return {false, static_cast<std::ptrdiff_t>(i)};
        residual = apply_migration(residual, pick);
    }
    return {true, -1};
}

bool is_successful(const MigrationGraph& g, const Strategy& s) {
    MigrationGraph residual = g;
    for (std::size_t i = 0; i < s.picks.size(); ++i) {
        const std::string& pick = s.picks[i];
        if (!residual.contains(pick))
            throw UnknownComponent("pick " + std::to_string(i) + " ('" + pick +
                                   "') is not in the residual graph");
        residual = apply_migration(residual, pick);  // unchanged when not migratable
    }
    return residual.empty();
}

std::size_t migration_length(const MigrationGraph& g) {
    return condensation(g).cluster_count();
}

std::vector<std::pair<MigrationCluster, int>> canonical_times(const MigrationGraph& g) {
    CondensationGraph cg = condensation(g);
    std::vector<std::pair<MigrationCluster, int>> result;
    result.reserve(cg.clusters.size());
    for (std::size_t i = 0; i < cg.clusters.size(); ++i)
        result.emplace_back(cg.clusters[i], cg.times[i]);
    return result;
}

CanonicalPlan canonical_plan(const MigrationGraph& g) {
    CondensationGraph cg = condensation(g);
    CanonicalPlan plan;
    plan.length = cg.cluster_count();
    int depth = 0;
    for (int t : cg.times) depth = std::max(depth, t);
    plan.depth = static_cast<std::size_t>(depth);
    plan.levels.resize(plan.depth);
    // Clusters are sorted by smallest member id, so each level inherits the
    // canonical within-level order.
    for (std::size_t i = 0; i < cg.clusters.size(); ++i)
        plan.levels[cg.times[i] - 1].push_back(cg.clusters[i]);
    for (const auto& level : plan.levels)
        for (std::size_t j = 2; j <= level.size(); ++j) plan.strategy_count *= j;
    return plan;
}

std::size_t migration_depth(const MigrationGraph& g) {
    CondensationGraph cg = condensation(g);
    int depth = 0;
    for (int t : cg.times) depth = std::max(depth, t);
    return static_cast<std::size_t>(depth);
}

std::size_t level_width(const MigrationGraph& g) {
    CondensationGraph cg = condensation(g);
    std::vector<std::size_t> sizes;
    for (int t : cg.times) {
        if (sizes.size() < static_cast<std::size_t>(t)) sizes.resize(t, 0);
        ++sizes[t - 1];
    }
    std::size_t width = 0;
    for (std::size_t s : sizes) width = std::max(width, s);
    return width;
}

namespace {

// Cluster-level residual state for walking all sink-first removal orders.
struct ClusterWalk {
    CondensationGraph cg;
    std::vector<std::vector<int>> in_edges;  // per cluster: predecessors
    std::vector<int> out_remaining;          // outgoing edges to alive clusters
    std::vector<char> alive;

    explicit ClusterWalk(const MigrationGraph& g) : cg(condensation(g)) {
        const int k = static_cast<int>(cg.cluster_count());
        in_edges.resize(k);
        out_remaining.assign(k, 0);
        alive.assign(k, 1);
        for (auto [u, w] : cg.edges) {
            in_edges[w].push_back(u);
            ++out_remaining[u];
        }
    }

    std::vector<int> sinks() const {
        std::vector<int> result;
        for (int c = 0; c < static_cast<int>(cg.cluster_count()); ++c)
            if (alive[c] && out_remaining[c] == 0) result.push_back(c);
        return result;
    }

    void remove(int c) {
        alive[c] = 0;
        for (int u : in_edges[c])
            if (alive[u]) --out_remaining[u];
    }

    void restore(int c) {
        alive[c] = 1;
        for (int u : in_edges[c])
            if (alive[u]) ++out_remaining[u];
    }
};

void enumerate_rec(ClusterWalk& walk, std::vector<std::string>& picks,
                   std::vector<Strategy>& out, std::uint64_t limit) {
    std::vector<int> sinks = walk.sinks();
    if (sinks.empty()) {
        if (out.size() >= limit)
            throw TooLarge("more than " + std::to_string(limit) +
                           " reasonable successful strategies");
        out.push_back(Strategy{picks});
        return;
    }
    for (int c : sinks) {
        picks.push_back(walk.cg.clusters[c].members.front());
        walk.remove(c);
        enumerate_rec(walk, picks, out, limit);
        walk.restore(c);
        picks.pop_back();
    }
}

}  // namespace

std::vector<Strategy> enumerate_reasonable_successful(const MigrationGraph& g,
                                                      std::uint64_t limit) {
    ClusterWalk walk(g);
    std::vector<Strategy> out;
    std::vector<std::string> picks;
    picks.reserve(walk.cg.cluster_count());
    enumerate_rec(walk, picks, out, limit);
    return out;
}

Strategy random_strategy(const MigrationGraph& g, std::uint64_t seed) {
    ClusterWalk walk(g);
    Rng rng(seed);
    Strategy s;
    s.picks.reserve(walk.cg.cluster_count());
    for (std::size_t step = 0; step < walk.cg.cluster_count(); ++step) {
        std::vector<int> sinks = walk.sinks();
        int c = sinks[rng.below(sinks.size())];
        const auto& members = walk.cg.clusters[c].members;
        s.picks.push_back(members[rng.below(members.size())]);
        walk.remove(c);
    }
    return s;
}

}  // namespace migraph
