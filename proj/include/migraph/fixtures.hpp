#pragma once

#include "migraph/graph.hpp"

namespace migraph::fixtures {

// Twelve-component example: nine clusters including the mutual pair {v5,v6}
// and the 3-cycle {v7,v8,v9}; length 9, depth 5, level sizes 3,1,1,1,3.
MigrationGraph fig1();

// GitLab-style self-managed deployment, 19 components in 8 clusters
// (sizes 4,3,3,2,2,2,2,1), condensation depth 3. Mirrors the shipped
// fixtures/gitlab.json.
MigrationGraph gitlab();

}  // namespace migraph::fixtures
