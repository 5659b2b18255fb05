#include "migraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "migraph/errors.hpp"

namespace migraph {

namespace {

void check_id_token(const std::string& id) {
    if (id.empty()) throw InvalidId("component id must be non-empty");
    for (unsigned char ch : id) {
        if (std::isspace(ch) || ch == '"' || ch == '{' || ch == '}')
            throw InvalidId("component id '" + id + "' contains whitespace or one of \"{}");
    }
}

}  // namespace

int MigrationGraph::index_of(std::string_view id) const {
    auto it = std::lower_bound(components_.begin(), components_.end(), id,
                               [](const Component& c, std::string_view key) { return c.id < key; });
    if (it == components_.end() || it->id != id) return -1;
    return static_cast<int>(it - components_.begin());
}

const Component& MigrationGraph::component(std::string_view id) const {
    int i = index_of(id);
    if (i < 0) throw UnknownComponent("unknown component '" + std::string(id) + "'");
    return components_[i];
}

std::span<const int> MigrationGraph::out_neighbors(int index) const {
    return {out_targets_.data() + out_offsets_[index],
            out_targets_.data() + out_offsets_[index + 1]};
}

std::span<const int> MigrationGraph::in_neighbors(int index) const {
    return {in_sources_.data() + in_offsets_[index], in_sources_.data() + in_offsets_[index + 1]};
}

int MigrationGraph::out_degree(int index) const {
    return out_offsets_[index + 1] - out_offsets_[index];
}

int MigrationGraph::in_degree(int index) const {
    return in_offsets_[index + 1] - in_offsets_[index];
}

std::vector<Edge> MigrationGraph::edges() const {
    std::vector<Edge> result;
    result.reserve(out_targets_.size());
    for (std::size_t v = 0; v < components_.size(); ++v)
        for (int w : out_neighbors(static_cast<int>(v)))
            result.push_back({components_[v].id, components_[w].id});
    return result;
}

MigrationGraph build_graph(std::vector<Component> components, std::vector<Edge> dependencies) {
    std::sort(components.begin(), components.end(),
              [](const Component& a, const Component& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < components.size(); ++i) {
        check_id_token(components[i].id);
        if (i > 0 && components[i].id == components[i - 1].id)
            throw DuplicateId("duplicate component id '" + components[i].id + "'");
    }

    MigrationGraph g;
    g.components_ = std::move(components);
    const int n = static_cast<int>(g.components_.size());

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(dependencies.size());
    for (const Edge& e : dependencies) {
        int s = g.index_of(e.source);
        if (s < 0) throw UnknownEndpoint("edge endpoint '" + e.source + "' is not a component");
        int t = g.index_of(e.target);
        if (t < 0) throw UnknownEndpoint("edge endpoint '" + e.target + "' is not a component");
        if (s == t) throw SelfLoop("self-loop on '" + e.source + "'");
        arcs.emplace_back(s, t);
    }
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (arcs[i] == arcs[i - 1])
            throw DuplicateEdge("duplicate edge " + g.components_[arcs[i].first].id + " -> " +
                                g.components_[arcs[i].second].id);
    }

    g.out_offsets_.assign(n + 1, 0);
    g.in_offsets_.assign(n + 1, 0);
    for (auto [s, t] : arcs) {
        ++g.out_offsets_[s + 1];
        ++g.in_offsets_[t + 1];
    }
    std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
    std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());
    g.out_targets_.resize(arcs.size());
    g.in_sources_.resize(arcs.size());
    std::vector<int> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    std::vector<int> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (auto [s, t] : arcs) g.out_targets_[out_fill[s]++] = t;
    // arcs are sorted by source, so per-source target runs are already sorted;
    // fill in-lists by target in a second sorted pass to keep them sorted too.
    std::sort(arcs.begin(), arcs.end(), [](auto a, auto b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    for (auto [s, t] : arcs) g.in_sources_[in_fill[t]++] = s;
    return g;
}

std::vector<std::string> direct_dependencies(const MigrationGraph& g, std::string_view v) {
    int i = g.index_of(v);
    if (i < 0) throw UnknownComponent("unknown component '" + std::string(v) + "'");
    std::vector<std::string> result;
    for (int w : g.out_neighbors(i)) result.push_back(g.id_of(w));
    return result;
}

std::vector<std::string> dependencies_closure(const MigrationGraph& g, std::string_view v) {
    int start = g.index_of(v);
    if (start < 0) throw UnknownComponent("unknown component '" + std::string(v) + "'");
    std::vector<char> seen(g.node_count(), 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.out_neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    std::vector<std::string> result;
    result.reserve(queue.size());
    for (int i : queue) result.push_back(g.id_of(i));
    return result;
}

MigrationGraph restrict_to(const MigrationGraph& g, const std::vector<std::string>& members) {
    std::vector<int> keep;
    keep.reserve(members.size());
    for (const std::string& id : members) {
        int i = g.index_of(id);
        if (i < 0) throw UnknownComponent("unknown component '" + id + "'");
        keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<char> in_set(g.node_count(), 0);
    for (int i : keep) in_set[i] = 1;
    std::vector<Component> comps;
    comps.reserve(keep.size());
    std::vector<Edge> edges;
    for (int i : keep) {
        comps.push_back(g.components()[i]);
        for (int w : g.out_neighbors(i))
            if (in_set[w]) edges.push_back({g.id_of(i), g.id_of(w)});
    }
    return build_graph(std::move(comps), std::move(edges));
}

namespace {

// Iterative Tarjan. comp[v] numbers SCCs in completion order, so every edge
// between distinct SCCs u -> w satisfies comp[u] > comp[w] (reverse
// topological numbering, sinks first).
struct SccResult {
    std::vector<int> comp;
    int count = 0;
};

SccResult strongly_connected_components(const MigrationGraph& g) {
    const int n = static_cast<int>(g.node_count());
    SccResult r;
    r.comp.assign(n, -1);
    std::vector<int> index(n, -1), lowlink(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    stack.reserve(n);
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            auto out = g.out_neighbors(v);
            bool descended = false;
            while (child < out.size()) {
                int w = out[child++];
                if (index[w] < 0) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    r.comp[w] = r.count;
                    if (w == v) break;
                }
                ++r.count;
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty())
                lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[finished]);
        }
    }
    return r;
}

}  // namespace

int CondensationGraph::cluster_index(std::string_view id) const {
    auto it = std::lower_bound(
        member_index.begin(), member_index.end(), id,
        [](const std::pair<std::string, int>& e, std::string_view key) { return e.first < key; });
    if (it == member_index.end() || it->first != id) return -1;
    return it->second;
}

CondensationGraph condensation(const MigrationGraph& g) {
    const int n = static_cast<int>(g.node_count());
    SccResult scc = strongly_connected_components(g);
    const int k = scc.count;

    // Members per raw SCC id; node indices are in id order already.
    std::vector<std::vector<int>> members(k);
    for (int v = 0; v < n; ++v) members[scc.comp[v]].push_back(v);

    // Canonical cluster order: lexicographic by smallest member id. Members
    // are index-sorted, so members.front() is the smallest.
    std::vector<int> order(k);
    for (int c = 0; c < k; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.id_of(members[a].front()) < g.id_of(members[b].front());
    });
    std::vector<int> rank(k);
    for (int pos = 0; pos < k; ++pos) rank[order[pos]] = pos;

    // Times over raw ids: Tarjan numbers SCCs sinks-first, so ascending raw id
    // order is a valid evaluation order for the longest-outgoing-path rule.
    std::vector<int> raw_time(k, 1);
    std::vector<std::pair<int, int>> raw_edges;
    for (int v = 0; v < n; ++v) {
        for (int w : g.out_neighbors(v)) {
            if (scc.comp[v] != scc.comp[w]) raw_edges.emplace_back(scc.comp[v], scc.comp[w]);
        }
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());
    for (auto [cu, cw] : raw_edges) raw_time[cu] = std::max(raw_time[cu], raw_time[cw] + 1);

    CondensationGraph cg;
    cg.clusters.resize(k);
    cg.times.resize(k);
    for (int c = 0; c < k; ++c) {
        MigrationCluster& cluster = cg.clusters[rank[c]];
        cluster.members.reserve(members[c].size());
        int max_out = 0;
        for (int v : members[c]) {
            cluster.members.push_back(g.id_of(v));
            int internal = 0;
            for (int w : g.out_neighbors(v))
                if (scc.comp[w] == c) ++internal;
            max_out = std::max(max_out, internal);
        }
        cluster.cluster_degree = max_out;
        cg.times[rank[c]] = raw_time[c];
    }
    cg.edges.reserve(raw_edges.size());
    for (auto [cu, cw] : raw_edges) cg.edges.emplace_back(rank[cu], rank[cw]);
    std::sort(cg.edges.begin(), cg.edges.end());

    cg.member_index.reserve(n);
    for (int v = 0; v < n; ++v) cg.member_index.emplace_back(g.id_of(v), rank[scc.comp[v]]);
    return cg;
}

MigrationCluster cluster_of(const MigrationGraph& g, std::string_view v) {
    if (g.index_of(v) < 0) throw UnknownComponent("unknown component '" + std::string(v) + "'");
    CondensationGraph cg = condensation(g);
    return cg.clusters[cg.cluster_index(v)];
}

std::vector<std::string> migratable_set(const MigrationGraph& g, std::string_view v) {
    if (g.index_of(v) < 0) throw UnknownComponent("unknown component '" + std::string(v) + "'");
    CondensationGraph cg = condensation(g);
    int c = cg.cluster_index(v);
    if (cg.times[c] != 1) return {};
    return cg.clusters[c].members;
}

MigrationGraph apply_migration(const MigrationGraph& g, std::string_view v) {
    std::vector<std::string> removed = migratable_set(g, v);
    if (removed.empty()) return g;
    std::vector<char> drop(g.node_count(), 0);
    for (const std::string& id : removed) drop[g.index_of(id)] = 1;
    std::vector<Component> comps;
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(g.node_count()); ++i) {
        if (drop[i]) continue;
        comps.push_back(g.components()[i]);
        for (int w : g.out_neighbors(i))
            if (!drop[w]) edges.push_back({g.id_of(i), g.id_of(w)});
    }
    return build_graph(std::move(comps), std::move(edges));
}

bool is_weakly_connected(const MigrationGraph& g) {
    const int n = static_cast<int>(g.node_count());
    if (n <= 1) return true;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int roots = n;
    for (int v = 0; v < n; ++v) {
        for (int w : g.out_neighbors(v)) {
            int a = find(v), b = find(w);
            if (a != b) {
                parent[a] = b;
                --roots;
            }
        }
    }
    return roots == 1;
}

}  // namespace migraph
