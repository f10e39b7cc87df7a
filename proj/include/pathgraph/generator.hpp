#pragma once

// Seeded random instances: chordal graphs as intersection graphs of random
// subtrees of a random host tree, and abstract profiles from random trace
// sets. All randomness flows from the caller's seed through a fixed-width
// engine with hand-rolled bounded draws, so outputs are reproducible across
// platforms.

#include "pathgraph/chordal.hpp"
#include "pathgraph/separation.hpp"

#include <random>

namespace pathgraph {

inline int bounded(std::mt19937_64& rng, int n) {
    // rejection sampling keeps the draw uniform
    if (n <= 1) return 0;
    uint64_t span = static_cast<uint64_t>(n);
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<int>(x % span);
}

inline std::vector<std::pair<int, int>> random_tree(std::mt19937_64& rng, int n) {
    if (n <= 1) return {};
    if (n == 2) return {{0, 1}};
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = bounded(rng, n);
    // Prufer decode (quadratic, fine at generator scale)
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> gone(n, 0);
    for (int x : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && deg[v] == 1) {
                leaf = v;
                break;
            }
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        gone[leaf] = 1;
        --deg[x];
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) rest.push_back(v);
    edges.emplace_back(rest[0], rest[1]);
    return edges;
}

// Connected random subtree of the host tree, grown edge by edge.
inline VertexSet random_subtree(std::mt19937_64& rng,
                                const std::vector<VertexSet>& adj, int n) {
    int target = 1 + bounded(rng, n);
    VertexSet nodes{bounded(rng, n)};
    std::vector<char> in(n, 0);
    in[nodes[0]] = 1;
    while (static_cast<int>(nodes.size()) < target) {
        std::vector<std::pair<int, int>> frontier;
        for (int u : nodes)
            for (int w : adj[u])
                if (!in[w]) frontier.emplace_back(u, w);
        if (frontier.empty()) break;
        auto [u, w] = frontier[bounded(rng, static_cast<int>(frontier.size()))];
        in[w] = 1;
        nodes.push_back(w);
    }
    return setops::normalized(std::move(nodes));
}

// Intersection graph of subtrees of a random host tree on `host_nodes`
// nodes; chordal by construction (asserted). One subtree per output vertex;
// the vertex count defaults to a draw from [host_nodes, 2*host_nodes].
inline SimpleGraph gen_subtree_model(uint64_t seed, int host_nodes, int num_vertices = -1) {
    if (host_nodes < 1) throw std::invalid_argument("gen_subtree_model: need n >= 1");
    std::mt19937_64 rng(seed);
    auto tree_edges = random_tree(rng, host_nodes);
    std::vector<VertexSet> adj(host_nodes);
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& x : adj) x = setops::normalized(std::move(x));
    int m = num_vertices >= 0 ? num_vertices : host_nodes + bounded(rng, host_nodes + 1);
    std::vector<VertexSet> subtrees;
    for (int i = 0; i < m; ++i) subtrees.push_back(random_subtree(rng, adj, host_nodes));
    int width = 1;
    for (int t = m - 1; t >= 10; t /= 10) ++width;
    auto name = [&](int i) {
        std::string s = std::to_string(i);
        return "v" + std::string(width - s.size(), '0') + s;
    };
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < m; ++i) labels.push_back(name(i));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (setops::intersects(subtrees[i], subtrees[j]))
                edges.emplace_back(labels[i], labels[j]);
    SimpleGraph g = SimpleGraph::make(std::move(labels), edges);
    if (!is_chordal(g).chordal)
        throw std::logic_error("gen_subtree_model: output not chordal");
    return g;
}

// Abstract profile over a random separator from random nonempty trace sets.
// Relations derive through the separation module.
inline Profile random_trace_profile(std::mt19937_64& rng, int max_parts = 6) {
    int qsize = 2 + bounded(rng, 3);
    int nparts = 2 + bounded(rng, std::max(1, max_parts - 1));
    std::vector<std::vector<VertexSet>> traces(nparts);
    for (auto& ts : traces) {
        int k = 1 + bounded(rng, 3);
        for (int t = 0; t < k; ++t) {
            VertexSet tr;
            for (int v = 0; v < qsize; ++v)
                if (bounded(rng, 2)) tr.push_back(v);
            if (tr.empty()) tr.push_back(bounded(rng, qsize));
            ts.push_back(tr);
        }
    }
    return profile_from_traces(qsize, traces);
}

} // namespace pathgraph
