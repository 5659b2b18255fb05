#include "migraph/patterns.hpp"

#include <algorithm>

#include "migraph/errors.hpp"

namespace migraph {

const char* pattern_kind_name(PatternKind kind) {
    switch (kind) {
        case PatternKind::Isolated: return "Isolated";
        case PatternKind::FanIn: return "FanIn";
        case PatternKind::FanOut: return "FanOut";
        case PatternKind::MutualPair: return "MutualPair";
        case PatternKind::Cycle: return "Cycle";
    }
    return "?";
}

std::vector<PatternInstance> detect_patterns(const MigrationGraph& g, int min_fan) {
    if (min_fan < 1) throw OutOfRange("min_fan must be >= 1");
    std::vector<PatternInstance> out;
    const int n = static_cast<int>(g.node_count());

    for (int v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0 && g.out_degree(v) == 0)
            out.push_back({PatternKind::Isolated, g.id_of(v), {g.id_of(v)}, 1, true});
    }
    for (int v = 0; v < n; ++v) {
        int deg = g.in_degree(v);
        if (deg < min_fan) continue;
        PatternInstance inst{PatternKind::FanIn, g.id_of(v), {}, deg, true};
        inst.participants.push_back(g.id_of(v));
        for (int w : g.in_neighbors(v)) inst.participants.push_back(g.id_of(w));
        std::sort(inst.participants.begin(), inst.participants.end());
        out.push_back(std::move(inst));
    }
    for (int v = 0; v < n; ++v) {
        int deg = g.out_degree(v);
        if (deg < min_fan) continue;
        PatternInstance inst{PatternKind::FanOut, g.id_of(v), {}, deg, true};
        inst.participants.push_back(g.id_of(v));
        for (int w : g.out_neighbors(v)) inst.participants.push_back(g.id_of(w));
        std::sort(inst.participants.begin(), inst.participants.end());
        out.push_back(std::move(inst));
    }

    CondensationGraph cg = condensation(g);
    for (const MigrationCluster& cluster : cg.clusters) {
        if (cluster.size() == 2) {
            out.push_back({PatternKind::MutualPair, cluster.members.front(), cluster.members, 2,
                           true});
        } else if (cluster.size() >= 3) {
            // cdeg 1 on a strongly connected block of this size means exactly
            // one simple directed cycle.
            out.push_back({PatternKind::Cycle, cluster.members.front(), cluster.members,
                           static_cast<int>(cluster.size()), cluster.cluster_degree == 1});
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const PatternInstance& a, const PatternInstance& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.focus < b.focus;
    });
    return out;
}

PatternSummary pattern_summary(const std::vector<PatternInstance>& instances) {
    PatternSummary summary;
    for (PatternKind kind : {PatternKind::Isolated, PatternKind::FanIn, PatternKind::FanOut,
                             PatternKind::MutualPair, PatternKind::Cycle})
        summary.counts[kind] = 0;
    for (const PatternInstance& inst : instances) {
        ++summary.counts[inst.kind];
        ++summary.arity_histogram[inst.arity];
        ++summary.total;
    }
    return summary;
}

}  // namespace migraph
