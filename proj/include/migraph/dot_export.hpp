#pragma once

#include <string>

#include "migraph/graph.hpp"

namespace migraph {

enum class DotMode { flat, clustered, condensed };

// GraphViz text with stable node ordering.
//   flat       one node per component
//   clustered  every migration cluster boxed as a dashed subgraph
//   condensed  one node per cluster, labeled with a representative and the
//              member count, edges from the condensation
std::string export_dot(const MigrationGraph& g, DotMode mode);

}  // namespace migraph
