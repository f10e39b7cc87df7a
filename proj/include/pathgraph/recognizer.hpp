#pragma once

// Recognition driver. Per connected component and per clique separator:
// build the profile, quotient it, look for a full antipodal triple, then the
// partial and weak colorings. The first failure is turned into a verified
// certificate (a full triple or a 2-edge-colored template embedding); if
// everything colors, the graph is a path graph and the colorings are the
// evidence. A colored-subgraph search over the template families backs the
// certificates up at desk scale.

#include "pathgraph/colored_graph.hpp"
#include "pathgraph/coloring.hpp"
#include "pathgraph/oracle.hpp"

#include <functional>

#include <json.hpp>

namespace pathgraph {

struct ForbiddenWitness {
    enum Kind { FullTriple, TemplateEmbedding };
    Kind kind;
    // FullTriple
    TripleWitness triple{{0, 0, 0}, -1};
    // TemplateEmbedding
    Family family = Family::W0;
    int parameter = 0;
    std::vector<int> mapping;  // template vertex -> part id
    bool induced = false;      // verification semantics
};

struct FailureReport {
    std::vector<std::string> component;  // labels of the failing component
    std::vector<std::string> separator;  // labels of the failing separator
    Profile profile;                     // quotiented profile at that separator
    ForbiddenWitness witness;
};

struct SeparatorEvidence {
    std::vector<std::string> separator;
    Profile profile;
    WeakColoring coloring;
};

struct ComponentRealization {
    SimpleGraph component;
    PathRealization realization;
};

struct Verdict {
    enum Kind { PathGraph, NotPathGraph, NotChordal };
    Kind kind;
    std::vector<std::string> hole;  // labels, when not chordal
    std::optional<FailureReport> failure;
    std::vector<SeparatorEvidence> evidence;
    std::vector<ComponentRealization> realizations;
};

struct RecognizeOptions {
    bool attach_realizations = true;
    int oracle_cap = 9;
    std::function<void(const Profile&)> profile_observer;
};

// One pendant neighbor per vertex; path-graph status is invariant under
// this, and full antipodal triangles show up as induced W0_3 wheels in the
// pendant graph's attachedness graphs.
inline SimpleGraph g_plus(const SimpleGraph& g) {
    std::vector<std::string> labels = g.labels();
    std::set<std::string> taken(labels.begin(), labels.end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edge_list()) edges.emplace_back(g.label(u), g.label(v));
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::string pendant = g.label(v) + "+";
        while (taken.count(pendant)) pendant += "+";
        taken.insert(pendant);
        labels.push_back(pendant);
        edges.emplace_back(g.label(v), pendant);
    }
    return SimpleGraph::make(std::move(labels), edges);
}

inline bool verify_certificate(const Profile& pr, const ForbiddenWitness& w) {
    int s = pr.num_parts();
    if (w.kind == ForbiddenWitness::FullTriple) {
        const auto& t = w.triple;
        for (int p : t.parts)
            if (p < 0 || p >= s) return false;
        if (t.parts[0] == t.parts[1] || t.parts[1] == t.parts[2] || t.parts[0] == t.parts[2])
            return false;
        if (!pr.antipodal(t.parts[0], t.parts[1]) || !pr.antipodal(t.parts[0], t.parts[2]) ||
            !pr.antipodal(t.parts[1], t.parts[2]))
            return false;
        const VertexSet* ps = pr.parts_at(t.witness_vertex);
        if (!ps) return false;
        for (int p : t.parts)
            if (!setops::contains(*ps, p)) return false;
        return true;
    }
    Template tmpl = make_template(w.family, w.parameter);
    if (static_cast<int>(w.mapping.size()) != tmpl.order()) return false;
    std::set<int> used;
    for (int p : w.mapping) {
        if (p < 0 || p >= s) return false;
        if (!used.insert(p).second) return false;
    }
    ColoredGraph host = attachedness_graph(pr);
    for (int a = 0; a < tmpl.order(); ++a)
        for (int b = a + 1; b < tmpl.order(); ++b) {
            EdgeColor want = tmpl.graph.at(a, b);
            EdgeColor have = host.at(w.mapping[a], w.mapping[b]);
            if (want != EdgeColor::None && have != want) return false;
            if (want == EdgeColor::None && w.induced && have != EdgeColor::None) return false;
        }
    return true;
}

namespace detail {

// Normalized outside forcers for an endpoint of a conflict path. In a
// single block D_i any outside antipodal neighbor works, except that a
// neighbor living in a pair block D_{i,k} is swapped for the upper u_k. In
// a pair block D_{i,j} the forcer of color i lives in D_j and vice versa.
inline int pick_forcer(const Profile& pr, const DPartition& dp, int endpoint, int block_index,
                       int forced_color) {
    const DBlock& b = dp.blocks[block_index];
    int best = -1;
    for (int q : pr.antipodal_neighbors(endpoint)) {
        if (dp.block_of[q] == block_index) continue;
        const DBlock& nb = dp.block(q);
        int candidate;
        if (!b.is_pair()) {
            if (!nb.is_pair()) candidate = q;
            else if (nb.i == b.i) candidate = dp.uppers.uppers[nb.j - 1];
            else if (nb.j == b.i) candidate = dp.uppers.uppers[nb.i - 1];
            else throw std::logic_error("pick_forcer: neighbor in a foreign pair block");
        } else {
            int opposite = forced_color == b.i ? b.j : b.i;
            if (nb.is_pair() || nb.i != opposite) continue;
            candidate = q;
        }
        if (best < 0 || candidate < best) best = candidate;
    }
    if (best < 0) throw std::logic_error("pick_forcer: endpoint has no usable forcer");
    return best;
}

// The one-dominance-chord-means-all-chords structure of antipodal odd
// cycles; checked on every extracted wheel rim.
inline void assert_chord_structure(const Profile& pr, const std::vector<int>& rim) {
    int n = static_cast<int>(rim.size());
    for (int p = 0; p < n; ++p) {
        bool has_chord = false;
        for (int q = 0; q < n; ++q) {
            if (q == p || q == (p + 1) % n || q == (p + n - 1) % n) continue;
            if (pr.dominates(rim[q], rim[p])) has_chord = true;
        }
        if (!has_chord) continue;
        for (int q = 0; q < n; ++q) {
            if (q == p || q == (p + 1) % n || q == (p + n - 1) % n) continue;
            if (!pr.dominates(rim[q], rim[p]))
                throw std::logic_error("odd-cycle chord structure violated");
        }
    }
}

} // namespace detail

// Certificate from a partial-coloring conflict: the conflicting part with
// its two side neighbors induces W1_3 with u_i when the neighbors are
// antipodal, and DF_5 with both uppers otherwise.
inline ForbiddenWitness extract_certificate(const Profile& pr, const DPartition& dp,
                                            const PartialConflict& c) {
    ForbiddenWitness w;
    w.kind = ForbiddenWitness::TemplateEmbedding;
    int ui = dp.uppers.uppers[c.i - 1];
    int uj = dp.uppers.uppers[c.j - 1];
    if (pr.antipodal(c.nbr_in_i, c.nbr_in_j)) {
        w.family = Family::W1;
        w.parameter = 1;
        // rim r0,r1,r2 with the antipodal spoke at r0
        w.mapping = {c.nbr_in_j, c.part, c.nbr_in_i, ui};
    } else {
        w.family = Family::DF;
        w.parameter = 2;
        // rim x0,x1,x2 then hubs
        w.mapping = {c.nbr_in_i, c.part, c.nbr_in_j, ui, uj};
    }
    return w;
}

// Certificate from a 2-coloring conflict: odd cycles become W0 wheels over
// the block's upper; forced-endpoint paths become W1 (one shared forcer),
// F / Ftilde (two forcers, closed or open), or DF (odd path in a pair
// block, one forcer per side).
inline ForbiddenWitness extract_certificate(const Profile& pr, const DPartition& dp,
                                            const TwoColorConflict& c) {
    ForbiddenWitness w;
    w.kind = ForbiddenWitness::TemplateEmbedding;
    const DBlock& b = dp.blocks[c.block];
    if (c.kind == TwoColorConflict::OddCycle) {
        detail::assert_chord_structure(pr, c.sequence);
        int k = (static_cast<int>(c.sequence.size()) - 1) / 2;
        w.family = Family::W0;
        w.parameter = k;
        w.mapping = c.sequence;
        w.mapping.push_back(dp.uppers.uppers[b.i - 1]);
        return w;
    }
    auto pcv = partial_coloring(pr, dp);
    const auto& pc = std::get<PartialColoring>(pcv);
    int e1 = c.sequence.front();
    int e2 = c.sequence.back();
    int c1 = b.is_pair() ? pc.color.at(e1) : b.i;
    int c2 = b.is_pair() ? pc.color.at(e2) : b.i;
    int f1 = detail::pick_forcer(pr, dp, e1, c.block, c1);
    int f2 = detail::pick_forcer(pr, dp, e2, c.block, c2);
    if (c.kind == TwoColorConflict::EvenPathSameColor) {
        int hub = dp.uppers.uppers[c1 - 1];
        if (f1 == f2) {
            int k = static_cast<int>(c.sequence.size()) / 2;
            w.family = Family::W1;
            w.parameter = k;
            w.mapping = {f1};  // rim r0 carries the antipodal spoke
            w.mapping.insert(w.mapping.end(), c.sequence.begin(), c.sequence.end());
            w.mapping.push_back(hub);
        } else {
            int n = static_cast<int>(c.sequence.size()) / 2 + 1;
            w.family = pr.antipodal(f1, f2) ? Family::Ftilde : Family::F;
            w.parameter = n;
            w.mapping = {f1};
            w.mapping.insert(w.mapping.end(), c.sequence.begin(), c.sequence.end());
            w.mapping.push_back(f2);
            w.mapping.push_back(hub);
        }
        return w;
    }
    // odd path with differently forced endpoints, only in a pair block
    int x = c1 == b.i ? b.j : b.i;  // f1 lives in D_x
    int y = c2 == b.i ? b.j : b.i;
    int n = (static_cast<int>(c.sequence.size()) + 3) / 2;
    w.family = Family::DF;
    w.parameter = n;
    w.mapping = {f1};
    w.mapping.insert(w.mapping.end(), c.sequence.begin(), c.sequence.end());
    w.mapping.push_back(f2);
    w.mapping.push_back(dp.uppers.uppers[x - 1]);
    w.mapping.push_back(dp.uppers.uppers[y - 1]);
    return w;
}

struct ForbiddenMatch {
    bool is_triple = false;
    std::array<int, 3> triangle{0, 0, 0};
    Family family = Family::W0;
    int parameter = 0;
    std::vector<int> mapping;
};

// Brute-force search for forbidden structures in a colored graph: full
// antipodal triangles (when a fullness oracle is supplied) and template
// family members as plain or induced colored subgraphs. Validation use.
inline std::optional<ForbiddenMatch> find_forbidden(
    const ColoredGraph& host, const std::vector<Family>& families, bool induced,
    const std::function<bool(int, int, int)>& fullness = nullptr, int max_vertices = 12) {
    if (host.n > max_vertices)
        throw std::invalid_argument("find_forbidden: host exceeds vertex cap");
    if (fullness) {
        for (int a = 0; a < host.n; ++a)
            for (int b = a + 1; b < host.n; ++b) {
                if (host.at(a, b) != EdgeColor::Antipodal) continue;
                for (int c = b + 1; c < host.n; ++c)
                    if (host.at(a, c) == EdgeColor::Antipodal &&
                        host.at(b, c) == EdgeColor::Antipodal && fullness(a, b, c)) {
                        ForbiddenMatch m;
                        m.is_triple = true;
                        m.triangle = {a, b, c};
                        return m;
                    }
            }
    }
    for (Family fam : families) {
        int lo = (fam == Family::W0 || fam == Family::W1) ? 1 : 2;
        for (int p = lo;; ++p) {
            Template t = make_template(fam, p);
            if (t.order() > host.n) break;
            auto emb = find_colored_embedding(t.graph, host, induced);
            if (emb) {
                ForbiddenMatch m;
                m.family = fam;
                m.parameter = p;
                m.mapping = *emb;
                return m;
            }
        }
    }
    return std::nullopt;
}

inline Verdict recognize(const SimpleGraph& g, const RecognizeOptions& opt = {}) {
    Verdict v;
    ChordalityResult cr = is_chordal(g);
    if (!cr.chordal) {
        v.kind = Verdict::NotChordal;
        for (int x : *cr.hole) v.hole.push_back(g.label(x));
        return v;
    }
    v.kind = Verdict::PathGraph;
    for (const VertexSet& comp : connected_components(g)) {
        SimpleGraph cg = induced_subgraph(g, comp);
        for (const VertexSet& q : clique_separators(cg)) {
            Profile raw = build_profile(cg, q);
            if (opt.profile_observer) opt.profile_observer(raw);
            Profile pr = quotient_profile(raw);
            if (opt.profile_observer) opt.profile_observer(pr);
            auto bad = validate_profile(pr);
            if (!bad.empty())
                throw std::logic_error("profile law violation: " + bad.front());
            WeakOutcome out = run_weak_coloring(pr);
            std::optional<ForbiddenWitness> witness;
            if (out.triple) {
                ForbiddenWitness w;
                w.kind = ForbiddenWitness::FullTriple;
                w.triple = *out.triple;
                witness = w;
            } else if (out.partial_conflict) {
                witness = extract_certificate(pr, out.dp, *out.partial_conflict);
            } else if (out.two_color_conflict) {
                witness = extract_certificate(pr, out.dp, *out.two_color_conflict);
            }
            if (witness) {
                if (!verify_certificate(pr, *witness))
                    throw std::logic_error("extracted certificate failed verification");
                v.kind = Verdict::NotPathGraph;
                FailureReport fr;
                fr.component = cg.labels();
                fr.separator = label_set(cg, q);
                fr.profile = pr;
                fr.witness = *witness;
                v.failure = std::move(fr);
                v.evidence.clear();
                v.realizations.clear();
                return v;
            }
            SeparatorEvidence ev;
            ev.separator = label_set(cg, q);
            ev.profile = pr;
            ev.coloring = *out.coloring;
            v.evidence.push_back(std::move(ev));
        }
        if (opt.attach_realizations) {
            int c = static_cast<int>(maximal_cliques(cg).cliques.size());
            if (c <= opt.oracle_cap) {
                OracleResult o = oracle_is_path_graph(cg, opt.oracle_cap);
                if (!o.is_path_graph)
                    throw std::logic_error("oracle disagrees with weak-coloring verdict");
                v.realizations.push_back({cg, std::move(*o.realization)});
            }
        }
    }
    return v;
}

inline nlohmann::json witness_to_json(const Profile& pr, const ForbiddenWitness& w) {
    nlohmann::json j;
    if (w.kind == ForbiddenWitness::FullTriple) {
        j["kind"] = "full-antipodal-triple";
        j["parts"] = {w.triple.parts[0], w.triple.parts[1], w.triple.parts[2]};
        j["witness_vertex"] = pr.vertex_name(w.triple.witness_vertex);
    } else {
        j["kind"] = "template-embedding";
        j["family"] = family_name(w.family);
        j["parameter"] = w.parameter;
        j["induced"] = w.induced;
        j["mapping"] = w.mapping;
    }
    return j;
}

inline ForbiddenWitness witness_from_json(const Profile& pr, const nlohmann::json& j) {
    ForbiddenWitness w;
    if (j.at("kind") == "full-antipodal-triple") {
        w.kind = ForbiddenWitness::FullTriple;
        auto parts = j.at("parts");
        w.triple.parts = {parts.at(0).get<int>(), parts.at(1).get<int>(),
                          parts.at(2).get<int>()};
        std::string name = j.at("witness_vertex");
        w.triple.witness_vertex = -1;
        for (int v : pr.separator)
            if (pr.vertex_name(v) == name) w.triple.witness_vertex = v;
    } else {
        w.kind = ForbiddenWitness::TemplateEmbedding;
        std::string fam = j.at("family");
        for (Family f : all_families())
            if (fam == family_name(f)) w.family = f;
        w.parameter = j.at("parameter");
        w.induced = j.at("induced");
        w.mapping = j.at("mapping").get<std::vector<int>>();
    }
    return w;
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    switch (v.kind) {
        case Verdict::PathGraph: j["verdict"] = "path-graph"; break;
        case Verdict::NotPathGraph: j["verdict"] = "not-path-graph"; break;
        case Verdict::NotChordal: j["verdict"] = "not-chordal"; break;
    }
    if (!v.hole.empty()) j["hole"] = v.hole;
    if (v.failure) {
        const FailureReport& fr = *v.failure;
        j["separator"] = fr.separator;
        j["certificate"] = witness_to_json(fr.profile, fr.witness);
        nlohmann::json parts = nlohmann::json::array();
        for (int p = 0; p < fr.profile.num_parts(); ++p)
            parts.push_back(part_label(fr.profile, p));
        j["parts"] = parts;
    }
    if (v.kind == Verdict::PathGraph) {
        nlohmann::json evs = nlohmann::json::array();
        for (const auto& ev : v.evidence) {
            nlohmann::json e;
            e["separator"] = ev.separator;
            e["colors"] = ev.coloring.color;
            e["palette_size"] = ev.coloring.num_uppers + 1;
            evs.push_back(e);
        }
        j["colorings"] = evs;
    }
    return j;
}

inline nlohmann::json clique_tree_to_json(const SimpleGraph& g, const CliqueTree& t) {
    nlohmann::json j;
    nlohmann::json cliques = nlohmann::json::array();
    for (const auto& k : t.cliques.cliques) cliques.push_back(label_set(g, k));
    j["cliques"] = cliques;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : t.tree_edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

} // namespace pathgraph
