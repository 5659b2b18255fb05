#include "migraph/dot_export.hpp"

#include <sstream>

namespace migraph {

namespace {

void emit_node(std::ostream& out, const std::string& indent, const Component& c) {
    out << indent << "\"" << c.id << "\"";
    if (!c.label.empty()) out << " [label=\"" << c.label << "\"]";
    out << ";\n";
}

void emit_edges(std::ostream& out, const MigrationGraph& g) {
    for (const Edge& e : g.edges())
        out << "  \"" << e.source << "\" -> \"" << e.target << "\";\n";
}

}  // namespace

std::string export_dot(const MigrationGraph& g, DotMode mode) {
    std::ostringstream out;
    out << "digraph migration {\n";
    switch (mode) {
        case DotMode::flat: {
            for (const Component& c : g.components()) emit_node(out, "  ", c);
            emit_edges(out, g);
            break;
        }
        case DotMode::clustered: {
            CondensationGraph cg = condensation(g);
            for (std::size_t i = 0; i < cg.clusters.size(); ++i) {
                out << "  subgraph cluster_" << i << " {\n"
                    << "    style=dashed;\n";
                for (const std::string& id : cg.clusters[i].members)
                    emit_node(out, "    ", g.component(id));
                out << "  }\n";
            }
            emit_edges(out, g);
            break;
        }
        case DotMode::condensed: {
            CondensationGraph cg = condensation(g);
            for (std::size_t i = 0; i < cg.clusters.size(); ++i) {
                const MigrationCluster& cluster = cg.clusters[i];
                out << "  c" << i << " [label=\"" << cluster.members.front() << " ("
                    << cluster.size() << ")\"];\n";
            }
            for (auto [u, w] : cg.edges) out << "  c" << u << " -> c" << w << ";\n";
            break;
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace migraph
