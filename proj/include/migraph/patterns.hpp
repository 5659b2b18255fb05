#pragma once

#include <map>
#include <string>
#include <vector>

#include "migraph/graph.hpp"

namespace migraph {

enum class PatternKind { Isolated, FanIn, FanOut, MutualPair, Cycle };

const char* pattern_kind_name(PatternKind kind);

struct PatternInstance {
    PatternKind kind = PatternKind::Isolated;
    std::string focus;                      // hub, or smallest member for pairs/cycles
    std::vector<std::string> participants;  // sorted, includes focus
    int arity = 1;                          // fan width or cycle length
    bool simple = true;  // Cycle only: induced subgraph is one simple directed cycle
};

// Local dependency shapes:
//   Isolated    node with no edges at all
//   FanIn       node with in-degree >= min_fan, participants = node + sources
//   FanOut      node with out-degree >= min_fan, participants = node + targets
//   MutualPair  2-node cluster
//   Cycle       cluster of size >= 3; simple is false when the cluster is
//               denser than one directed cycle
// min_fan >= 1 (OutOfRange otherwise); at min_fan 1 every node participates
// in at least one instance. Results ordered by kind, then focus.
std::vector<PatternInstance> detect_patterns(const MigrationGraph& g, int min_fan = 2);

struct PatternSummary {
    std::map<PatternKind, int> counts;     // zero entries present for all kinds
    std::map<int, int> arity_histogram;    // arity -> instances with that arity
    int total = 0;
};

PatternSummary pattern_summary(const std::vector<PatternInstance>& instances);

}  // namespace migraph
