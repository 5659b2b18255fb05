#include "migraph/random_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "migraph/errors.hpp"
#include "migraph/rng.hpp"
#include "migraph/sampling.hpp"

namespace migraph {

namespace {

std::vector<std::string> numbered_ids(int n) {
    int width = 1;
    for (int v = n; v >= 10; v /= 10) ++width;
    if (width > 10) width = 10;
    std::vector<std::string> ids;
    ids.reserve(n);
    char buf[32];
    for (int i = 1; i <= n; ++i) {
        std::snprintf(buf, sizeof buf, "n%0*d", width, i);
        ids.emplace_back(buf);
    }
    return ids;
}

// Visits each index in [first, count) independently with probability p, in
// order, by geometric jumps.
template <class Fn>
void bernoulli_skip(std::uint64_t count, double p, Rng& rng, Fn&& visit) {
    if (p <= 0.0) return;
    if (p >= 1.0) {
        for (std::uint64_t i = 0; i < count; ++i) visit(i);
        return;
    }
    const double denom = std::log1p(-p);
    double cursor = -1.0;
    while (true) {
        double u = rng.next_unit();
        cursor += 1.0 + std::floor(std::log1p(-u) / denom);
        if (cursor >= static_cast<double>(count)) return;
        visit(static_cast<std::uint64_t>(cursor));
    }
}

}  // namespace

SynthesisResult synthesize_with_partition(const RandomGraphParams& params) {
    if (params.n < 1) throw OutOfRange("graph synthesis requires n >= 1");
    const int n = params.n;
    Rng master(params.seed);
    Rng partition_rng = master.fork(0);
    Rng cycle_rng = master.fork(1);
    Rng order_rng = master.fork(2);
    Rng edge_rng = master.fork(3);

    SynthesisResult result;
    result.ids = numbered_ids(n);
    result.partition = sample_uniform_partition(n, partition_rng);
    const auto& blocks = result.partition.blocks;
    const int m = static_cast<int>(blocks.size());

    std::vector<Component> components;
    components.reserve(n);
    for (const std::string& id : result.ids) components.push_back({id, "", {}});

    std::vector<Edge> edges;
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<int> order(block.begin(), block.end());
        cycle_rng.shuffle(order);
        for (std::size_t i = 0; i < order.size(); ++i) {
            int from = order[i] - 1;
            int to = order[(i + 1) % order.size()] - 1;
            edges.push_back({result.ids[from], result.ids[to]});
        }
    }

    if (m > 1) {
        std::vector<int> block_order(m);
        for (int b = 0; b < m; ++b) block_order[b] = b;
        order_rng.shuffle(block_order);
        const double p = std::min(1.0, (std::log(static_cast<double>(m)) + params.c) / m);
        for (int i = 0; i + 1 < m; ++i) {
            const auto& src = blocks[block_order[i]];
            const std::uint64_t row = static_cast<std::uint64_t>(m - 1 - i);
            bernoulli_skip(row, p, edge_rng, [&](std::uint64_t offset) {
                const auto& dst = blocks[block_order[i + 1 + offset]];
                int from = src[edge_rng.below(src.size())] - 1;
                int to = dst[edge_rng.below(dst.size())] - 1;
                edges.push_back({result.ids[from], result.ids[to]});
            });
        }
    }

    result.graph = build_graph(std::move(components), std::move(edges));
    return result;
}

MigrationGraph synthesize_migration_graph(const RandomGraphParams& params) {
    return synthesize_with_partition(params).graph;
}

MigrationGraph sample_er_dag(int n, double c, std::uint64_t seed) {
    if (n < 1) throw OutOfRange("er dag sampling requires n >= 1");
    Rng master(seed);
    Rng order_rng = master.fork(0);
    Rng edge_rng = master.fork(1);

    std::vector<std::string> ids = numbered_ids(n);
    std::vector<Component> components;
    components.reserve(n);
    for (const std::string& id : ids) components.push_back({id, "", {}});

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    order_rng.shuffle(order);

    std::vector<Edge> edges;
    const double p = n > 1 ? std::min(1.0, (std::log(static_cast<double>(n)) + c) / n) : 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const std::uint64_t row = static_cast<std::uint64_t>(n - 1 - i);
        bernoulli_skip(row, p, edge_rng, [&](std::uint64_t offset) {
            edges.push_back({ids[order[i]], ids[order[i + 1 + offset]]});
        });
    }
    return build_graph(std::move(components), std::move(edges));
}

}  // namespace migraph
