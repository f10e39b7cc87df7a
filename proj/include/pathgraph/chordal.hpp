#pragma once

// Chordality machinery: maximum cardinality search, perfect elimination
// check with hole extraction, maximal cliques, clique trees, and
// clique-separator enumeration.

#include "pathgraph/graph.hpp"

#include <numeric>
#include <optional>
#include <queue>

namespace pathgraph {

struct EliminationOrder {
    // order[0] is eliminated first; a permutation of the vertices.
    std::vector<int> order;
};

// Chordless cycle of length >= 4, listed in cycle order.
using HoleWitness = std::vector<int>;

struct CliqueSet {
    std::vector<VertexSet> cliques; // canonical order: lexicographic as index sets
};

struct CliqueTree {
    CliqueSet cliques;
    std::vector<std::pair<int, int>> tree_edges; // unordered node index pairs, i < j

    std::vector<VertexSet> adjacency() const {
        std::vector<VertexSet> adj(cliques.cliques.size());
        for (auto [a, b] : tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& x : adj) x = setops::normalized(std::move(x));
        return adj;
    }
};

// Maximum cardinality search. Visits a vertex of maximum weight each round
// (ties to the smallest index), incrementing neighbor weights. The reverse
// visit order is a perfect elimination order exactly when G is chordal.
inline EliminationOrder mcs_order(const SimpleGraph& g) {
    int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("mcs_order: empty graph");
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        visit.push_back(best);
        for (int w : g.neighbors(best))
            if (!visited[w]) ++weight[w];
    }
    std::reverse(visit.begin(), visit.end());
    return EliminationOrder{std::move(visit)};
}

namespace detail {

// Neighbors of order[i] that are eliminated later.
inline VertexSet later_neighbors(const SimpleGraph& g, const std::vector<int>& pos, int v) {
    VertexSet out;
    for (int w : g.neighbors(v))
        if (pos[w] > pos[v]) out.push_back(w);
    return setops::normalized(std::move(out));
}

// Shortest chordless cycle through v, p, w where p, w are non-adjacent
// neighbors of v: a shortest p-w path avoiding N[v] \ {p, w} plus v.
inline std::optional<HoleWitness> hole_through(const SimpleGraph& g, int v, int p, int w) {
    int n = g.num_vertices();
    std::vector<char> blocked(n, 0);
    blocked[v] = 1;
    for (int x : g.neighbors(v)) blocked[x] = 1;
    blocked[p] = blocked[w] = 0;
    std::vector<int> parent(n, -1);
    std::queue<int> q;
    q.push(p);
    parent[p] = p;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == w) break;
        for (int x : g.neighbors(u))
            if (!blocked[x] && parent[x] < 0) {
                parent[x] = u;
                q.push(x);
            }
    }
    if (parent[w] < 0) return std::nullopt;
    HoleWitness cyc{v};
    std::vector<int> path;
    for (int u = w; u != p; u = parent[u]) path.push_back(u);
    path.push_back(p);
    std::reverse(path.begin(), path.end()); // p ... w
    cyc.insert(cyc.end(), path.begin(), path.end());
    return cyc;
}

inline bool hole_is_valid(const SimpleGraph& g, const HoleWitness& c) {
    size_t k = c.size();
    if (k < 4) return false;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

} // namespace detail

struct ChordalityResult {
    bool chordal;
    EliminationOrder order;        // MCS order, meaningful when chordal
    std::optional<HoleWitness> hole;
};

inline ChordalityResult is_chordal(const SimpleGraph& g) {
    if (g.num_vertices() == 0) return {true, {}, std::nullopt};
    EliminationOrder eo = mcs_order(g);
    int n = g.num_vertices();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[eo.order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = eo.order[i];
        VertexSet rn = detail::later_neighbors(g, pos, v);
        if (rn.empty()) continue;
        int p = *std::min_element(rn.begin(), rn.end(),
                                  [&](int a, int b) { return pos[a] < pos[b]; });
        for (int w : rn) {
            if (w == p || g.has_edge(p, w)) continue;
            // Elimination failed at v: p and w are non-adjacent later neighbors.
            auto hole = detail::hole_through(g, v, p, w);
            if (!hole) {
                // Fall back to scanning all (v, p, w) triples; any hole in the
                // graph is discoverable this way.
                for (int a = 0; a < n && !hole; ++a) {
                    const VertexSet& na = g.neighbors(a);
                    for (size_t x = 0; x < na.size() && !hole; ++x)
                        for (size_t y = x + 1; y < na.size() && !hole; ++y)
                            if (!g.has_edge(na[x], na[y]))
                                hole = detail::hole_through(g, a, na[x], na[y]);
                }
            }
            if (!hole || !detail::hole_is_valid(g, *hole))
                throw std::logic_error("chordality: failed to certify a hole");
            return {false, eo, hole};
        }
    }
    return {true, eo, std::nullopt};
}

// Maximal cliques of a chordal graph from the elimination order, in
// canonical (lexicographic) order.
inline CliqueSet maximal_cliques(const SimpleGraph& g) {
    ChordalityResult cr = is_chordal(g);
    if (!cr.chordal) throw std::invalid_argument("maximal_cliques: graph is not chordal");
    int n = g.num_vertices();
    if (n == 0) return {};
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cr.order.order[i]] = i;
    std::vector<VertexSet> cand;
    for (int v = 0; v < n; ++v) {
        VertexSet c = detail::later_neighbors(g, pos, v);
        c.push_back(v);
        cand.push_back(setops::normalized(std::move(c)));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<VertexSet> out;
    for (size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cand.size() && maximal; ++j)
            if (i != j && setops::is_subset(cand[i], cand[j])) maximal = false;
        if (maximal) out.push_back(cand[i]);
    }
    return CliqueSet{std::move(out)};
}

inline bool has_subtree_property(const SimpleGraph& g, const CliqueTree& t) {
    int c = static_cast<int>(t.cliques.cliques.size());
    auto adj = t.adjacency();
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> nodes;
        for (int i = 0; i < c; ++i)
            if (setops::contains(t.cliques.cliques[i], v)) nodes.push_back(i);
        if (nodes.empty()) return false;
        // connectivity of the induced node set
        std::vector<char> in(c, 0), seen(c, 0);
        for (int i : nodes) in[i] = 1;
        std::vector<int> stack{nodes[0]};
        seen[nodes[0]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : adj[u])
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (reached != static_cast<int>(nodes.size())) return false;
    }
    return true;
}

// Maximum-weight spanning tree over clique intersection sizes (Kruskal,
// ties by node index pair). Zero-weight edges are allowed so disconnected
// chordal graphs still get one tree.
inline CliqueTree build_clique_tree(const SimpleGraph& g) {
    CliqueSet cs = maximal_cliques(g);
    int c = static_cast<int>(cs.cliques.size());
    CliqueTree t{cs, {}};
    if (c <= 1) return t;
    struct E {
        int w, a, b;
    };
    std::vector<E> es;
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            es.push_back({static_cast<int>(setops::intersect(cs.cliques[a], cs.cliques[b]).size()), a, b});
    std::stable_sort(es.begin(), es.end(), [](const E& x, const E& y) {
        if (x.w != y.w) return x.w > y.w;
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    std::vector<int> dsu(c);
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    };
    for (const E& e : es) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        dsu[ra] = rb;
        t.tree_edges.emplace_back(e.a, e.b);
        if (static_cast<int>(t.tree_edges.size()) == c - 1) break;
    }
    if (!has_subtree_property(g, t))
        throw std::logic_error("build_clique_tree: subtree property violated");
    return t;
}

// Maximal cliques whose removal disconnects the rest, in canonical order.
inline std::vector<VertexSet> clique_separators(const SimpleGraph& g) {
    std::vector<VertexSet> out;
    for (const VertexSet& q : maximal_cliques(g).cliques) {
        auto comps = connected_components(g, q);
        if (comps.size() >= 2) out.push_back(q);
    }
    return out;
}

// True when every vertex's cliques induce a path in the tree.
// The tree must carry exactly the maximal cliques of g.
inline bool verify_clique_path_tree(const SimpleGraph& g, const CliqueTree& t) {
    CliqueSet expect = maximal_cliques(g);
    std::vector<VertexSet> sorted = t.cliques.cliques;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expect.cliques)
        throw std::invalid_argument("verify_clique_path_tree: clique set mismatch");
    int c = static_cast<int>(t.cliques.cliques.size());
    if (static_cast<int>(t.tree_edges.size()) != std::max(0, c - 1)) return false;
    auto adj = t.adjacency();
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<char> in(c, 0);
        int count = 0;
        for (int i = 0; i < c; ++i)
            if (setops::contains(t.cliques.cliques[i], v)) {
                in[i] = 1;
                ++count;
            }
        int edges = 0;
        for (int i = 0; i < c; ++i) {
            if (!in[i]) continue;
            int deg = 0;
            for (int w : adj[i])
                if (in[w]) ++deg;
            if (deg > 2) return false;
            edges += deg;
        }
        edges /= 2;
        if (edges != count - 1) return false; // acyclic, so this means connected
    }
    return true;
}

inline std::string clique_label(const SimpleGraph& g, const VertexSet& k) {
    std::string s;
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) s += " ";
        s += g.label(k[i]);
    }
    return s;
}

inline std::string clique_tree_to_dot(const SimpleGraph& g, const CliqueTree& t) {
    std::ostringstream out;
    out << "graph cliquetree {\n";
    for (size_t i = 0; i < t.cliques.cliques.size(); ++i)
        out << "  n" << i << " [label=\"" << clique_label(g, t.cliques.cliques[i]) << "\"];\n";
    for (auto [a, b] : t.tree_edges) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace pathgraph
