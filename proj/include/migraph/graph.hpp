#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace migraph {

struct Component {
    std::string id;
    std::string label;                        // empty when absent
    std::map<std::string, std::string> meta;  // free-form, ordered for stable output
};

struct Edge {
    std::string source;
    std::string target;
};

// Directed dependency graph over named components. Immutable after build_graph;
// every operation below returns fresh values, so graphs are safe to share
// across threads. Components are kept sorted by id, so node indices follow
// lexicographic id order and index-sorted results are already in canonical
// order.
class MigrationGraph {
  public:
    MigrationGraph() = default;

    std::size_t node_count() const { return components_.size(); }
    std::size_t edge_count() const { return out_targets_.size(); }
    bool empty() const { return components_.empty(); }

    const std::vector<Component>& components() const { return components_; }
    const std::string& id_of(int index) const { return components_[index].id; }

    // -1 when the id is not present.
    int index_of(std::string_view id) const;
    bool contains(std::string_view id) const { return index_of(id) >= 0; }
    const Component& component(std::string_view id) const;  // UnknownComponent

    std::span<const int> out_neighbors(int index) const;
    std::span<const int> in_neighbors(int index) const;
    int out_degree(int index) const;
    int in_degree(int index) const;

    // Edges in canonical order (lexicographic by source id, then target id).
    std::vector<Edge> edges() const;

    friend MigrationGraph build_graph(std::vector<Component> components,
                                      std::vector<Edge> dependencies);

  private:
    std::vector<Component> components_;  // sorted by id
    std::vector<int> out_offsets_;       // CSR over component indices
    std::vector<int> out_targets_;
    std::vector<int> in_offsets_;
    std::vector<int> in_sources_;
};

// One strongly connected block. cluster_degree is the maximum out-degree
// inside the induced subgraph; it is 0 exactly for singletons and 1 exactly
// when the block is a simple directed cycle.
struct MigrationCluster {
    std::vector<std::string> members;  // sorted by id
    int cluster_degree = 0;

    std::size_t size() const { return members.size(); }
};

// Acyclic cluster graph. Clusters are sorted by smallest member id; edges are
// sorted index pairs; times[i] is the canonical migration time of clusters[i]
// (1 + longest outgoing path in the condensation).
struct CondensationGraph {
    std::vector<MigrationCluster> clusters;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> times;

    // Index of the cluster containing the component, -1 when unknown.
    int cluster_index(std::string_view id) const;

    std::size_t cluster_count() const { return clusters.size(); }

    // Populated by condensation(): member id -> cluster index, sorted by id.
    std::vector<std::pair<std::string, int>> member_index;
};

// Validates and freezes a graph. Throws InvalidId, DuplicateId,
// UnknownEndpoint, SelfLoop or DuplicateEdge, naming the offending element.
MigrationGraph build_graph(std::vector<Component> components,
                           std::vector<Edge> dependencies);

// Ids this component directly depends on, sorted.
std::vector<std::string> direct_dependencies(const MigrationGraph& g, std::string_view v);

// Reflexive-transitive dependency closure dep(v), sorted; always contains v.
std::vector<std::string> dependencies_closure(const MigrationGraph& g, std::string_view v);

// Induced subgraph on the given members (set semantics, duplicates ignored).
MigrationGraph restrict_to(const MigrationGraph& g, const std::vector<std::string>& members);

// Strongly connected block around v with its cluster degree.
MigrationCluster cluster_of(const MigrationGraph& g, std::string_view v);

// Members of c(v) when that cluster has no edge leaving it, otherwise empty.
std::vector<std::string> migratable_set(const MigrationGraph& g, std::string_view v);

// Removes m(v) and all incident edges; returns g unchanged when v is not
// migratable.
MigrationGraph apply_migration(const MigrationGraph& g, std::string_view v);

// All clusters with crossing edges and canonical migration times.
CondensationGraph condensation(const MigrationGraph& g);

// Connectivity of the underlying undirected graph. True for the empty graph.
bool is_weakly_connected(const MigrationGraph& g);

}  // namespace migraph
