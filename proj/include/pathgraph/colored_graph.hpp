#pragma once

// 2-edge-colored graphs, the five forbidden template families, and
// backtracking colored-subgraph embedding (plain or induced).

#include "pathgraph/separation.hpp"

#include <optional>

namespace pathgraph {

enum class EdgeColor : unsigned char { None = 0, Antipodal = 1, Dominance = 2 };

struct ColoredGraph {
    int n = 0;
    std::vector<EdgeColor> m;  // n*n matrix, symmetric

    explicit ColoredGraph(int n_ = 0) : n(n_), m(static_cast<size_t>(n_) * n_, EdgeColor::None) {}

    EdgeColor at(int a, int b) const { return m[static_cast<size_t>(a) * n + b]; }

    void set(int a, int b, EdgeColor c) {
        m[static_cast<size_t>(a) * n + b] = c;
        m[static_cast<size_t>(b) * n + a] = c;
    }

    int degree(int v, EdgeColor c) const {
        int d = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && at(v, u) == c) ++d;
        return d;
    }

    int num_edges() const {
        int d = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (at(a, b) != EdgeColor::None) ++d;
        return d;
    }
};

// The Q-attachedness graph of a profile, 2-edge-colored.
inline ColoredGraph attachedness_graph(const Profile& pr) {
    ColoredGraph cg(pr.num_parts());
    for (auto [a, b] : pr.dominance_pairs) cg.set(a, b, EdgeColor::Dominance);
    for (auto [a, b] : pr.antipodal_edges) cg.set(a, b, EdgeColor::Antipodal);
    return cg;
}

enum class Family { W0, W1, F, Ftilde, DF };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::W0: return "W0";
        case Family::W1: return "W1";
        case Family::F: return "F";
        case Family::Ftilde: return "Ftilde";
        case Family::DF: return "DF";
    }
    return "?";
}

struct Template {
    Family family;
    int parameter;  // k for wheels, n for fans and double fans
    ColoredGraph graph;

    int order() const { return graph.n; }
};

// Template shapes. Wheels W{2k+1}: antipodal odd rim r0..r2k plus a hub with
// dominance spokes; W1 turns the single spoke hub-r0 antipodal. F{2n+1}: an
// antipodal path p1..p2n with a hub antipodal to both ends and dominance to
// the interior. Ftilde{2n+1}: an antipodal 2n-cycle with the hub antipodal
// to two adjacent rim vertices. DF{2n+1}: an antipodal rim path x0..x{2n-2}
// with two antipodal-joined hubs; each hub covers the rim by dominance
// except the far endpoint, which it meets antipodally.
inline Template make_template(Family fam, int parameter) {
    const bool wheel = fam == Family::W0 || fam == Family::W1;
    if (wheel && parameter < 1)
        throw std::invalid_argument("wheel templates need k >= 1");
    if (!wheel && parameter < 2)
        throw std::invalid_argument("fan templates need n >= 2");
    int k = parameter, n = parameter;
    Template t{fam, parameter, ColoredGraph(0)};
    switch (fam) {
        case Family::W0:
        case Family::W1: {
            int rim = 2 * k + 1;
            ColoredGraph g(rim + 1);
            int hub = rim;
            for (int i = 0; i < rim; ++i) g.set(i, (i + 1) % rim, EdgeColor::Antipodal);
            for (int i = 0; i < rim; ++i) g.set(hub, i, EdgeColor::Dominance);
            if (fam == Family::W1) g.set(hub, 0, EdgeColor::Antipodal);
            t.graph = std::move(g);
            break;
        }
        case Family::F: {
            int path = 2 * n;  // p_1..p_2n are vertices 0..2n-1
            ColoredGraph g(path + 1);
            int hub = path;
            for (int i = 0; i + 1 < path; ++i) g.set(i, i + 1, EdgeColor::Antipodal);
            g.set(hub, 0, EdgeColor::Antipodal);
            g.set(hub, path - 1, EdgeColor::Antipodal);
            for (int i = 1; i + 1 < path; ++i) g.set(hub, i, EdgeColor::Dominance);
            t.graph = std::move(g);
            break;
        }
        case Family::Ftilde: {
            int rim = 2 * n;
            ColoredGraph g(rim + 1);
            int hub = rim;
            for (int i = 0; i < rim; ++i) g.set(i, (i + 1) % rim, EdgeColor::Antipodal);
            g.set(hub, 0, EdgeColor::Antipodal);
            g.set(hub, rim - 1, EdgeColor::Antipodal);
            for (int i = 1; i + 1 < rim; ++i) g.set(hub, i, EdgeColor::Dominance);
            t.graph = std::move(g);
            break;
        }
        case Family::DF: {
            int rim = 2 * n - 1;  // x0..x_{2n-2} are vertices 0..rim-1
            ColoredGraph g(rim + 2);
            int h1 = rim, h2 = rim + 1;
            for (int i = 0; i + 1 < rim; ++i) g.set(i, i + 1, EdgeColor::Antipodal);
            g.set(h1, h2, EdgeColor::Antipodal);
            for (int i = 0; i + 1 < rim; ++i) g.set(h1, i, EdgeColor::Dominance);
            g.set(h1, rim - 1, EdgeColor::Antipodal);
            for (int i = 1; i < rim; ++i) g.set(h2, i, EdgeColor::Dominance);
            g.set(h2, 0, EdgeColor::Antipodal);
            t.graph = std::move(g);
            break;
        }
    }
    return t;
}

// all_families carries the five induced obstructions; subgraph_families the
// three that already obstruct as plain (not necessarily induced) subgraphs.
inline std::vector<Family> all_families() {
    return {Family::W0, Family::W1, Family::F, Family::Ftilde, Family::DF};
}

inline std::vector<Family> subgraph_families() {
    return {Family::W0, Family::W1, Family::F};
}

// Colored-subgraph embedding of `pat` into `host`: every pattern edge maps
// to a host edge of the same color; `induced` additionally forbids host
// edges between images of pattern non-edges. Returns the mapping pattern
// vertex -> host vertex, smallest in lexicographic order.
inline std::optional<std::vector<int>> find_colored_embedding(const ColoredGraph& pat,
                                                              const ColoredGraph& host,
                                                              bool induced) {
    if (pat.n > host.n) return std::nullopt;
    // order pattern vertices so each is adjacent to an earlier one when possible
    std::vector<int> order;
    std::vector<char> placed(pat.n, 0);
    for (int start = 0; start < pat.n; ++start) {
        if (placed[start]) continue;
        order.push_back(start);
        placed[start] = 1;
        for (size_t head = order.size() - 1; head < order.size(); ++head) {
            for (int u = 0; u < pat.n; ++u)
                if (!placed[u] && pat.at(order[head], u) != EdgeColor::None) {
                    order.push_back(u);
                    placed[u] = 1;
                }
        }
    }
    std::vector<int> map(pat.n, -1);
    std::vector<char> used(host.n, 0);
    std::function<bool(size_t)> go = [&](size_t idx) {
        if (idx == order.size()) return true;
        int pv = order[idx];
        for (int hv = 0; hv < host.n; ++hv) {
            if (used[hv]) continue;
            if (host.degree(hv, EdgeColor::Antipodal) < pat.degree(pv, EdgeColor::Antipodal))
                continue;
            if (host.degree(hv, EdgeColor::Dominance) < pat.degree(pv, EdgeColor::Dominance))
                continue;
            bool ok = true;
            for (size_t e = 0; e < idx && ok; ++e) {
                int pu = order[e];
                EdgeColor want = pat.at(pv, pu);
                EdgeColor have = host.at(hv, map[pu]);
                if (want != EdgeColor::None ? have != want
                                            : (induced && have != EdgeColor::None))
                    ok = false;
            }
            if (!ok) continue;
            map[pv] = hv;
            used[hv] = 1;
            if (go(idx + 1)) return true;
            map[pv] = -1;
            used[hv] = 0;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return map;
}

inline bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.n != b.n || a.num_edges() != b.num_edges()) return false;
    return find_colored_embedding(a, b, true).has_value();
}

inline std::string colored_graph_to_dot(const ColoredGraph& g,
                                        const std::vector<std::string>* names = nullptr) {
    std::ostringstream out;
    out << "graph colored {\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  p" << v;
        if (names && v < static_cast<int>(names->size()))
            out << " [label=\"" << (*names)[v] << "\"]";
        out << ";\n";
    }
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (g.at(a, b) == EdgeColor::None) continue;
            out << "  p" << a << " -- p" << b;
            if (g.at(a, b) == EdgeColor::Dominance) out << " [style=dotted]";
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

// A template read back as an abstract profile for the coloring machinery.
// Dominance runs rim -> hub; every triangle containing a dominance edge is
// declared full via a synthetic witness vertex.
inline Profile template_as_profile(const Template& t) {
    const ColoredGraph& g = t.graph;
    std::vector<std::pair<int, int>> ant, dom;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (g.at(a, b) == EdgeColor::Antipodal) ant.emplace_back(a, b);
            if (g.at(a, b) == EdgeColor::Dominance) dom.emplace_back(a, b);
        }
    std::vector<std::pair<int, VertexSet>> neighboring;
    int witness = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c) {
                int colors[3] = {static_cast<int>(g.at(a, b)), static_cast<int>(g.at(a, c)),
                                 static_cast<int>(g.at(b, c))};
                bool triangle = colors[0] && colors[1] && colors[2];
                bool has_dom = colors[0] == 2 || colors[1] == 2 || colors[2] == 2;
                if (triangle && has_dom) neighboring.emplace_back(witness++, VertexSet{a, b, c});
            }
    return profile_from_relations(g.n, std::move(ant), std::move(dom), std::move(neighboring));
}

} // namespace pathgraph
