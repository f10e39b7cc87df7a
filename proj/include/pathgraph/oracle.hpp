#pragma once

// Ground truth by exhaustion: enumerate every labeled tree on the maximal
// cliques through Prufer sequences and test the clique-path-tree condition.
// Practical up to nine cliques (9^7 trees). Also realizes a path graph as
// paths in the host tree.

#include "pathgraph/chordal.hpp"

#include <optional>

namespace pathgraph {

struct PathRealization {
    CliqueTree host_tree;
    std::vector<std::pair<std::string, std::vector<int>>> vertex_paths;
    // each vertex's cliques in order along its path in the host tree
};

struct OracleResult {
    bool is_path_graph;
    long long trees_checked;
    std::optional<PathRealization> realization;
};

namespace detail {

// Prufer decode, smallest-leaf rule.
inline std::vector<std::pair<int, int>> prufer_to_tree(const std::vector<int>& seq, int c) {
    std::vector<int> deg(c, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            while (deg[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min(leaf, c - 1), std::max(leaf, c - 1));
    return edges;
}

// Does every vertex's clique set induce a path in the tree?
inline bool path_condition(const std::vector<std::pair<int, int>>& edges,
                           const std::vector<std::vector<int>>& clique_pair_vertices,
                           const std::vector<int>& clique_count, int c, int nv,
                           std::vector<int>& edge_cnt, std::vector<int>& deg_scratch) {
    std::fill(edge_cnt.begin(), edge_cnt.end(), 0);
    std::fill(deg_scratch.begin(), deg_scratch.end(), 0);
    for (auto [a, b] : edges) {
        for (int v : clique_pair_vertices[a * c + b]) {
            ++edge_cnt[v];
            if (++deg_scratch[v * c + a] > 2) return false;
            if (++deg_scratch[v * c + b] > 2) return false;
        }
    }
    for (int v = 0; v < nv; ++v)
        if (edge_cnt[v] != clique_count[v] - 1) return false;
    return true;
}

} // namespace detail

// Orders a vertex's cliques along its induced path in the tree.
inline std::vector<int> path_order(const CliqueTree& t, int v) {
    std::vector<int> nodes;
    for (size_t i = 0; i < t.cliques.cliques.size(); ++i)
        if (setops::contains(t.cliques.cliques[i], v)) nodes.push_back(static_cast<int>(i));
    if (nodes.size() <= 1) return nodes;
    auto adj = t.adjacency();
    auto deg_in = [&](int x) {
        int d = 0;
        for (int y : adj[x])
            if (std::find(nodes.begin(), nodes.end(), y) != nodes.end()) ++d;
        return d;
    };
    int start = -1;
    for (int x : nodes)
        if (deg_in(x) == 1) {
            start = x;
            break;
        }
    if (start < 0) throw std::invalid_argument("path_order: cliques do not induce a path");
    std::vector<int> out{start};
    int prev = -1, cur = start;
    while (out.size() < nodes.size()) {
        int next = -1;
        for (int y : adj[cur])
            if (y != prev && std::find(nodes.begin(), nodes.end(), y) != nodes.end()) {
                next = y;
                break;
            }
        if (next < 0) throw std::invalid_argument("path_order: cliques do not induce a path");
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

// Realization as paths in a host tree; re-checks the intersection property
// against the edge set.
inline PathRealization realize_paths(const SimpleGraph& g, const CliqueTree& t) {
    if (!verify_clique_path_tree(g, t))
        throw std::invalid_argument("realize_paths: not a clique path tree");
    PathRealization r;
    r.host_tree = t;
    for (int v = 0; v < g.num_vertices(); ++v)
        r.vertex_paths.emplace_back(g.label(v), path_order(t, v));
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v = u + 1; v < g.num_vertices(); ++v) {
            const auto& pu = r.vertex_paths[u].second;
            const auto& pv = r.vertex_paths[v].second;
            bool meet = false;
            for (int x : pu)
                if (std::find(pv.begin(), pv.end(), x) != pv.end()) meet = true;
            if (meet != g.has_edge(u, v))
                throw std::logic_error("realize_paths: intersection mismatch");
        }
    return r;
}

// Exhaustive decision. Enumerates Prufer sequences in lexicographic order
// and returns the first tree meeting the path condition for every vertex.
inline OracleResult oracle_is_path_graph(const SimpleGraph& g, int max_cliques = 9) {
    ChordalityResult cr = is_chordal(g);
    if (!cr.chordal) throw std::invalid_argument("oracle: graph is not chordal");
    CliqueSet cs = maximal_cliques(g);
    int c = static_cast<int>(cs.cliques.size());
    if (c > max_cliques) throw std::invalid_argument("oracle: clique count exceeds cap");
    int nv = g.num_vertices();
    OracleResult res{false, 0, std::nullopt};
    if (c <= 1) {
        res.is_path_graph = true;
        CliqueTree t{cs, {}};
        if (nv > 0) res.realization = realize_paths(g, t);
        else res.realization = PathRealization{t, {}};
        res.trees_checked = 1;
        return res;
    }
    std::vector<int> clique_count(nv, 0);
    for (const auto& k : cs.cliques)
        for (int v : k) ++clique_count[v];
    std::vector<std::vector<int>> pair_vertices(static_cast<size_t>(c) * c);
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            pair_vertices[a * c + b] = setops::intersect(cs.cliques[a], cs.cliques[b]);
    std::vector<int> edge_cnt(nv), deg_scratch(static_cast<size_t>(nv) * c);
    std::vector<int> seq(std::max(0, c - 2), 0);
    while (true) {
        ++res.trees_checked;
        auto edges = detail::prufer_to_tree(seq, c);
        if (detail::path_condition(edges, pair_vertices, clique_count, c, nv, edge_cnt,
                                   deg_scratch)) {
            res.is_path_graph = true;
            CliqueTree t{cs, std::move(edges)};
            res.realization = realize_paths(g, t);
            return res;
        }
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == c - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return res;
}

inline std::string realization_to_text(const SimpleGraph& g, const PathRealization& r) {
    std::ostringstream out;
    for (const auto& [label, path] : r.vertex_paths) {
        out << label << ":";
        for (int n : path) out << " [" << clique_label(g, r.host_tree.cliques.cliques[n]) << "]";
        out << "\n";
    }
    return out.str();
}

} // namespace pathgraph
