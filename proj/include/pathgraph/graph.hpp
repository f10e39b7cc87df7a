#pragma once

// Simple undirected graphs with string-labeled vertices. Vertices are
// addressed by index; indices follow the lexicographic order of the labels,
// so every "smallest vertex first" rule downstream is label order.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathgraph {

// Sorted, duplicate-free vector of vertex indices of one host graph.
using VertexSet = std::vector<int>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace setops {

inline bool contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet subtract(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

} // namespace setops

class SimpleGraph {
public:
    SimpleGraph() = default;

    // Labels are sorted and deduplicated; edges may name only listed labels.
    static SimpleGraph make(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        SimpleGraph g;
        g.labels_ = std::move(labels);
        g.adj_.assign(g.labels_.size(), {});
        for (const auto& [a, b] : edges) {
            int u = g.index_of(a);
            int v = g.index_of(b);
            if (u < 0 || v < 0)
                throw std::invalid_argument("edge endpoint not a declared vertex: " + a + " " + b);
            if (u == v) throw std::invalid_argument("self-loop at " + a);
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nbrs : g.adj_) nbrs = setops::normalized(std::move(nbrs));
        return g;
    }

    int num_vertices() const { return static_cast<int>(labels_.size()); }

    int num_edges() const {
        int d = 0;
        for (const auto& nbrs : adj_) d += static_cast<int>(nbrs.size());
        return d / 2;
    }

    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    const VertexSet& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
        return setops::contains(adj_[u], v);
    }

    // Index of a label, or -1.
    int index_of(const std::string& label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return -1;
        return static_cast<int>(it - labels_.begin());
    }

    VertexSet all_vertices() const {
        VertexSet s(labels_.size());
        for (int v = 0; v < num_vertices(); ++v) s[v] = v;
        return s;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < num_vertices(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_clique(const VertexSet& s) const {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (!has_edge(s[i], s[j])) return false;
        return true;
    }

    bool operator==(const SimpleGraph& o) const {
        return labels_ == o.labels_ && adj_ == o.adj_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
};

// Resolves labels to indices; throws on unknown labels.
inline VertexSet vertex_set(const SimpleGraph& g, const std::vector<std::string>& labels) {
    VertexSet s;
    s.reserve(labels.size());
    for (const auto& l : labels) {
        int v = g.index_of(l);
        if (v < 0) throw std::invalid_argument("unknown vertex: " + l);
        s.push_back(v);
    }
    return setops::normalized(std::move(s));
}

inline std::vector<std::string> label_set(const SimpleGraph& g, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(g.label(v));
    return out;
}

// Edge-list format: one edge per line as two whitespace-separated labels,
// '#' starts a comment line, "v <label>" declares an isolated vertex.
inline SimpleGraph parse_edge_list(std::istream& in,
                                   std::vector<std::string>* warnings = nullptr) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::pair<std::string, std::string>, bool> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "v") {
            if (tok.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'v <label>'");
            labels.push_back(tok[1]);
            continue;
        }
        if (tok.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected two labels");
        if (tok[0] == tok[1])
            throw ParseError("line " + std::to_string(lineno) + ": self-loop at " + tok[0]);
        auto key = std::minmax(tok[0], tok[1]);
        if (seen.count(key)) {
            if (warnings)
                warnings->push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                                    key.first + " " + key.second + " (ignored)");
            continue;
        }
        seen[key] = true;
        labels.push_back(tok[0]);
        labels.push_back(tok[1]);
        edges.emplace_back(tok[0], tok[1]);
    }
    return SimpleGraph::make(std::move(labels), edges);
}

inline SimpleGraph parse_edge_list(const std::string& text,
                                   std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return parse_edge_list(in, warnings);
}

// Canonical form: isolated vertices first, then edges, all in label order.
inline std::string serialize_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) out << "v " << g.label(v) << "\n";
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edge_list()) {
        auto p = std::minmax(g.label(u), g.label(v));
        edges.emplace_back(p.first, p.second);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) out << a << " " << b << "\n";
    return out.str();
}

inline SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<std::string> labels = label_set(g, s);
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) edges.emplace_back(g.label(s[i]), g.label(s[j]));
    return SimpleGraph::make(std::move(labels), edges);
}

// Connected components as vertex sets, ordered by smallest member.
// `excluded` vertices are treated as deleted.
inline std::vector<VertexSet> connected_components(const SimpleGraph& g,
                                                   const VertexSet& excluded = {}) {
    int n = g.num_vertices();
    std::vector<char> skip(n, 0), seen(n, 0);
    for (int v : excluded) skip.at(v) = 1;
    std::vector<VertexSet> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || skip[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w] && !skip[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        comps.push_back(setops::normalized(std::move(comp)));
    }
    return comps;
}

inline bool is_connected(const SimpleGraph& g) {
    return g.num_vertices() == 0 || connected_components(g).size() == 1;
}

} // namespace pathgraph
