#pragma once

// Separation profiles: for a clique separator Q, the parts of G - Q with
// their relevant-clique traces on Q, the per-vertex neighboring map, and the
// attachedness/dominance/antipodality relations. Everything downstream (the
// colorings, the certificates) works on these profiles; the relations depend
// on the traces only, so a profile can also be built from bare trace sets or
// from raw relation data for testing.

#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"

#include <functional>

namespace pathgraph {

struct Part {
    VertexSet component;            // the V_i; may be empty in abstract profiles
    std::vector<VertexSet> traces;  // nonempty subsets of Q, sorted, deduplicated
};

struct Profile {
    std::vector<std::string> vertex_names;        // names for separator vertices
    VertexSet separator;                          // indices into vertex_names space
    std::vector<Part> parts;
    std::vector<std::pair<int, int>> antipodal_edges;  // part id pairs, i < j
    std::vector<std::pair<int, int>> dominance_pairs;  // (a, b) meaning a <= b, a != b
    std::vector<std::pair<int, VertexSet>> neighboring; // Q vertex -> part ids
    bool quotiented = false;

    int num_parts() const { return static_cast<int>(parts.size()); }

    bool antipodal(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(antipodal_edges.begin(), antipodal_edges.end(),
                                  std::make_pair(a, b));
    }

    // Reflexive dominance.
    bool dominates(int a, int b) const {
        if (a == b) return true;
        return std::binary_search(dominance_pairs.begin(), dominance_pairs.end(),
                                  std::make_pair(a, b));
    }

    bool attached(int a, int b) const {
        if (a == b) return false;
        return antipodal(a, b) || dominates(a, b) || dominates(b, a);
    }

    VertexSet antipodal_neighbors(int p) const {
        VertexSet out;
        for (auto [a, b] : antipodal_edges) {
            if (a == p) out.push_back(b);
            if (b == p) out.push_back(a);
        }
        return setops::normalized(std::move(out));
    }

    const VertexSet* parts_at(int v) const {
        for (const auto& [u, ps] : neighboring)
            if (u == v) return &ps;
        return nullptr;
    }

    std::string part_name(int p) const { return "p" + std::to_string(p); }

    std::string vertex_name(int v) const {
        if (v >= 0 && v < static_cast<int>(vertex_names.size())) return vertex_names[v];
        return "?" + std::to_string(v);
    }
};

inline bool traces_attached(const Part& p, const Part& p2) {
    for (const auto& t : p.traces)
        for (const auto& t2 : p2.traces)
            if (setops::intersects(t, t2)) return true;
    return false;
}

// Dominance at trace level: p <= p2 when the parts are attached and every
// trace of p2 either contains all traces of p or misses them all.
// Reflexive on the same part by convention; two distinct parts with equal
// multi-trace sets do NOT dominate each other in general (the all-in/all-out
// test can fail against their own smaller traces).
inline bool dominance_holds(const Part& p, const Part& p2) {
    if (&p == &p2) return true;
    if (!traces_attached(p, p2)) return false;
    for (const auto& t2 : p2.traces) {
        bool all_inside = true, all_outside = true;
        for (const auto& t : p.traces) {
            if (!setops::is_subset(t, t2)) all_inside = false;
            if (setops::intersects(t, t2)) all_outside = false;
        }
        if (!all_inside && !all_outside) return false;
    }
    return true;
}

// Antipodality: attached and dominating in neither direction. Attachedness
// thus partitions into antipodality and dominance by construction. (A
// witness-pair formulation "some intersecting, inclusion-incomparable trace
// pair" misses pairs like two parts both carrying {b,e},{b},{e}: attached,
// incomparable, every intersecting pair nested. Such twin parts cannot share
// a side of any clique path tree, so they must count as antipodal.)
inline bool antipodality_holds(const Part& p, const Part& p2) {
    if (&p == &p2) return false;
    return traces_attached(p, p2) && !dominance_holds(p, p2) && !dominance_holds(p2, p);
}

namespace detail {

// Relations and the neighboring map are functions of the trace sets.
inline void derive_relations(Profile& pr) {
    pr.antipodal_edges.clear();
    pr.dominance_pairs.clear();
    pr.neighboring.clear();
    int s = pr.num_parts();
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            if (a == b) continue;
            if (a < b && antipodality_holds(pr.parts[a], pr.parts[b]))
                pr.antipodal_edges.emplace_back(a, b);
            if (dominance_holds(pr.parts[a], pr.parts[b]))
                pr.dominance_pairs.emplace_back(a, b);
        }
    std::sort(pr.antipodal_edges.begin(), pr.antipodal_edges.end());
    std::sort(pr.dominance_pairs.begin(), pr.dominance_pairs.end());
    std::map<int, VertexSet> nb;
    for (int p = 0; p < s; ++p)
        for (const auto& t : pr.parts[p].traces)
            for (int v : t) nb[v].push_back(p);
    for (auto& [v, ps] : nb) pr.neighboring.emplace_back(v, setops::normalized(std::move(ps)));
}

} // namespace detail

// Builds the profile of a chordal graph at a clique separator Q. Parts are
// the components of G - Q ordered by smallest vertex; each part's traces are
// the intersections with Q of the maximal cliques K of G[V_i u Q] having
// K n Q nonempty and K != Q.
inline Profile build_profile(const SimpleGraph& g, const VertexSet& q) {
    if (!g.is_clique(q)) throw std::invalid_argument("build_profile: Q is not a clique");
    auto comps = connected_components(g, q);
    if (comps.size() < 2) throw std::invalid_argument("build_profile: Q does not separate");
    Profile pr;
    pr.vertex_names = g.labels();
    pr.separator = q;
    for (const auto& vi : comps) {
        VertexSet scope = setops::unite(vi, q);
        SimpleGraph gamma = induced_subgraph(g, scope);
        Part part;
        part.component = vi;
        for (const auto& k_local : maximal_cliques(gamma).cliques) {
            VertexSet k;
            for (int lv : k_local) k.push_back(g.index_of(gamma.label(lv)));
            k = setops::normalized(std::move(k));
            if (k == q) continue;
            VertexSet trace = setops::intersect(k, q);
            if (trace.empty()) continue;
            part.traces.push_back(std::move(trace));
        }
        std::sort(part.traces.begin(), part.traces.end());
        part.traces.erase(std::unique(part.traces.begin(), part.traces.end()),
                          part.traces.end());
        pr.parts.push_back(std::move(part));
    }
    detail::derive_relations(pr);
    return pr;
}

// Abstract profile from bare trace sets over a separator {q0, q1, ...}.
inline Profile profile_from_traces(int separator_size,
                                   const std::vector<std::vector<VertexSet>>& traces) {
    Profile pr;
    for (int v = 0; v < separator_size; ++v) {
        pr.vertex_names.push_back("q" + std::to_string(v));
        pr.separator.push_back(v);
    }
    for (const auto& ts : traces) {
        Part p;
        p.traces = ts;
        for (auto& t : p.traces)
            if (t.empty()) throw std::invalid_argument("profile_from_traces: empty trace");
        std::sort(p.traces.begin(), p.traces.end());
        p.traces.erase(std::unique(p.traces.begin(), p.traces.end()), p.traces.end());
        pr.parts.push_back(std::move(p));
    }
    detail::derive_relations(pr);
    return pr;
}

// Abstract profile from raw relation data (no traces), e.g. hand-copied
// poset examples. Dominance pairs must already be transitively closed.
inline Profile profile_from_relations(int num_parts,
                                      std::vector<std::pair<int, int>> antipodal,
                                      std::vector<std::pair<int, int>> dominance,
                                      std::vector<std::pair<int, VertexSet>> neighboring = {}) {
    Profile pr;
    pr.parts.resize(num_parts);
    for (auto& [a, b] : antipodal)
        if (a > b) std::swap(a, b);
    std::sort(antipodal.begin(), antipodal.end());
    antipodal.erase(std::unique(antipodal.begin(), antipodal.end()), antipodal.end());
    std::sort(dominance.begin(), dominance.end());
    std::sort(neighboring.begin(), neighboring.end());
    pr.antipodal_edges = std::move(antipodal);
    pr.dominance_pairs = std::move(dominance);
    pr.neighboring = std::move(neighboring);
    int max_v = -1;
    for (const auto& [v, ps] : pr.neighboring) max_v = std::max(max_v, v);
    for (int v = 0; v <= max_v; ++v) {
        pr.vertex_names.push_back("q" + std::to_string(v));
        pr.separator.push_back(v);
    }
    return pr;
}

// Quotient by mutual dominance. Equivalent parts merge into one class;
// relations are re-derived from the merged traces when traces exist,
// otherwise taken from class representatives (they agree across a class).
inline Profile quotient_profile(const Profile& pr) {
    int s = pr.num_parts();
    std::vector<int> cls(s, -1);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < s; ++a) {
        if (cls[a] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.push_back({a});
        cls[a] = id;
        for (int b = a + 1; b < s; ++b)
            if (cls[b] < 0 && pr.dominates(a, b) && pr.dominates(b, a)) {
                cls[b] = id;
                classes[id].push_back(b);
            }
    }
    bool has_traces = true;
    for (const auto& p : pr.parts)
        if (p.traces.empty()) has_traces = false;

    Profile out;
    out.vertex_names = pr.vertex_names;
    out.separator = pr.separator;
    out.quotiented = true;
    for (const auto& members : classes) {
        Part merged;
        for (int m : members) {
            merged.component = setops::unite(merged.component, pr.parts[m].component);
            for (const auto& t : pr.parts[m].traces) merged.traces.push_back(t);
        }
        std::sort(merged.traces.begin(), merged.traces.end());
        merged.traces.erase(std::unique(merged.traces.begin(), merged.traces.end()),
                            merged.traces.end());
        out.parts.push_back(std::move(merged));
    }
    if (has_traces) {
        detail::derive_relations(out);
    } else {
        // representative-based relations
        for (size_t a = 0; a < classes.size(); ++a)
            for (size_t b = 0; b < classes.size(); ++b) {
                if (a == b) continue;
                int ra = classes[a][0], rb = classes[b][0];
                if (a < b && pr.antipodal(ra, rb))
                    out.antipodal_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                if (pr.dominates(ra, rb) && !pr.dominates(rb, ra))
                    out.dominance_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        std::sort(out.antipodal_edges.begin(), out.antipodal_edges.end());
        std::sort(out.dominance_pairs.begin(), out.dominance_pairs.end());
        for (const auto& [v, ps] : pr.neighboring) {
            VertexSet mapped;
            for (int p : ps) mapped.push_back(cls[p]);
            out.neighboring.emplace_back(v, setops::normalized(std::move(mapped)));
        }
    }
    return out;
}

// Relation-law validation. Returns human-readable violations; empty = ok.
// Checked: antipodality and strict dominance are disjoint and (for profiles
// with traces) union to attachedness; dominance is transitive; quotiented
// dominance is antisymmetric; antipodal witnesses lie in the neighboring map.
inline std::vector<std::string> validate_profile(const Profile& pr) {
    std::vector<std::string> bad;
    int s = pr.num_parts();
    bool has_traces = true;
    for (const auto& p : pr.parts)
        if (p.traces.empty()) has_traces = false;
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b) {
            bool ant = pr.antipodal(a, b);
            bool dom = pr.dominates(a, b) || pr.dominates(b, a);
            if (ant && dom)
                bad.push_back("antipodality and dominance overlap on " +
                              pr.part_name(a) + "," + pr.part_name(b));
            if (has_traces) {
                bool att = false;
                for (const auto& t : pr.parts[a].traces)
                    for (const auto& t2 : pr.parts[b].traces)
                        if (setops::intersects(t, t2)) att = true;
                if (att != (ant || dom))
                    bad.push_back("attachedness differs from antipodality+dominance on " +
                                  pr.part_name(a) + "," + pr.part_name(b));
            }
        }
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                if (a != b && b != c && a != c && pr.dominates(a, b) && pr.dominates(b, c) &&
                    !pr.dominates(a, c))
                    bad.push_back("dominance not transitive via " + pr.part_name(b));
    if (pr.quotiented)
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                if (pr.dominates(a, b) && pr.dominates(b, a))
                    bad.push_back("quotiented dominance not antisymmetric on " +
                                  pr.part_name(a) + "," + pr.part_name(b));
    if (has_traces) {
        // attached parts are neighboring at every shared trace vertex
        for (auto [a, b] : pr.antipodal_edges)
            for (const auto& t : pr.parts[a].traces)
                for (const auto& t2 : pr.parts[b].traces)
                    for (int v : setops::intersect(t, t2)) {
                        const VertexSet* ps = pr.parts_at(v);
                        if (!ps || !setops::contains(*ps, a) || !setops::contains(*ps, b))
                            bad.push_back("antipodal witness " + pr.vertex_name(v) +
                                          " missing from neighboring map");
                    }
    }
    return bad;
}

inline std::string part_label(const Profile& pr, int p) {
    std::ostringstream out;
    out << pr.part_name(p);
    const Part& part = pr.parts[p];
    if (!part.component.empty()) {
        out << " {";
        for (size_t i = 0; i < part.component.size(); ++i)
            out << (i ? " " : "") << pr.vertex_name(part.component[i]);
        out << "}";
    }
    if (!part.traces.empty()) {
        out << " [";
        for (size_t i = 0; i < part.traces.size(); ++i) {
            if (i) out << " ";
            out << "{";
            for (size_t j = 0; j < part.traces[i].size(); ++j)
                out << (j ? " " : "") << pr.vertex_name(part.traces[i][j]);
            out << "}";
        }
        out << "]";
    }
    return out.str();
}

// Antipodal edges solid, dominance edges dotted with the arrow pointing
// from the dominated part to its dominator.
inline std::string profile_to_dot(const Profile& pr) {
    std::ostringstream out;
    out << "graph attachedness {\n";
    for (int p = 0; p < pr.num_parts(); ++p)
        out << "  p" << p << " [label=\"" << part_label(pr, p) << "\"];\n";
    for (auto [a, b] : pr.antipodal_edges)
        out << "  p" << a << " -- p" << b << ";\n";
    for (auto [a, b] : pr.dominance_pairs) {
        if (pr.dominates(b, a) && a > b) continue;
        out << "  p" << a << " -- p" << b << " [style=dotted, dir="
            << (pr.dominates(b, a) ? "both" : "forward") << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace pathgraph
