#pragma once

// The dominance poset analysis and the colorings. For a quotiented profile:
// the upper bounds u_1..u_l, the partition into D_i / D_{i,j} blocks, the
// crossing set, the (unique) partial coloring on Upper u Cross, and the weak
// coloring obtained by solving one 2-coloring problem per block. A
// brute-force strong coloring over set partitions backs it all up at desk
// scale.

#include "pathgraph/separation.hpp"

#include <array>
#include <optional>
#include <queue>
#include <set>
#include <variant>

namespace pathgraph {

struct UpperList {
    std::vector<int> uppers; // dominance-maximal part ids, ascending
    int count() const { return static_cast<int>(uppers.size()); }
};

struct DBlock {
    int i = 0;           // 1-based upper index
    int j = 0;           // second upper index for pair blocks, 0 for singles
    VertexSet members;   // part ids
    bool is_pair() const { return j != 0; }
};

struct DPartition {
    UpperList uppers;
    std::vector<DBlock> blocks;  // singles first (i ascending), then pairs (lex)
    std::vector<int> block_of;   // part id -> block index

    const DBlock& block(int part) const { return blocks.at(block_of.at(part)); }
};

struct TripleWitness {
    std::array<int, 3> parts;  // ascending part ids, pairwise antipodal
    int witness_vertex;        // Q vertex whose neighboring set holds all three
};

struct PartialColoring {
    std::map<int, int> color;  // part id -> color in 1..l, domain Upper u Cross
};

// A part of D_{i,j} with antipodal neighbors on both sides.
struct PartialConflict {
    int part;
    int nbr_in_i;
    int nbr_in_j;
    int i, j;
};

struct WeakColoring {
    std::vector<int> color;  // per part, colors 1..num_uppers+1
    int num_uppers = 0;
};

struct TwoColorConflict {
    enum Kind { OddCycle, EvenPathSameColor, OddPathDiffColor };
    Kind kind;
    std::vector<int> sequence;  // the cycle, or the forced-endpoint path
    int block;                  // index into DPartition::blocks
};

// Dominance-maximal parts of a quotiented profile, in part id order.
inline UpperList upper_bounds(const Profile& pr) {
    UpperList ul;
    int s = pr.num_parts();
    for (int p = 0; p < s; ++p) {
        bool maximal = true;
        for (int q = 0; q < s && maximal; ++q)
            if (q != p && pr.dominates(p, q)) maximal = false;
        if (maximal) ul.uppers.push_back(p);
    }
    return ul;
}

// D_i: parts below u_i and no other upper. D_{i,j}: parts below exactly
// u_i and u_j. A part below three or more uppers means a full antipodal
// triple exists among the uppers; callers run triple detection first.
inline DPartition d_partition(const Profile& pr, const UpperList& ul) {
    int l = ul.count();
    DPartition dp;
    dp.uppers = ul;
    std::map<std::pair<int, int>, std::vector<int>> bucket;
    for (int p = 0; p < pr.num_parts(); ++p) {
        std::vector<int> ups;
        for (int k = 0; k < l; ++k)
            if (pr.dominates(p, ul.uppers[k])) ups.push_back(k + 1);
        if (ups.empty())
            throw std::logic_error("d_partition: part below no upper bound (not quotiented?)");
        if (ups.size() > 2)
            throw std::invalid_argument(
                "d_partition: part below three uppers; run full-triple detection first");
        if (ups.size() == 1) bucket[{ups[0], 0}].push_back(p);
        else bucket[{ups[0], ups[1]}].push_back(p);
    }
    std::vector<std::pair<int, int>> keys;
    for (int i = 1; i <= l; ++i) keys.emplace_back(i, 0);
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            if (bucket.count({i, j})) keys.emplace_back(i, j);
    dp.block_of.assign(pr.num_parts(), -1);
    for (auto [i, j] : keys) {
        DBlock b;
        b.i = i;
        b.j = j;
        auto it = bucket.find({i, j});
        if (it != bucket.end()) b.members = setops::normalized(it->second);
        for (int p : b.members) dp.block_of[p] = static_cast<int>(dp.blocks.size());
        dp.blocks.push_back(std::move(b));
    }
    return dp;
}

// First full antipodal triple in scan order: separator vertices ascending,
// part triples lexicographic.
inline std::optional<TripleWitness> find_full_antipodal_triple(const Profile& pr) {
    for (const auto& [v, ps] : pr.neighboring) {
        int m = static_cast<int>(ps.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                if (!pr.antipodal(ps[a], ps[b])) continue;
                for (int c = b + 1; c < m; ++c)
                    if (pr.antipodal(ps[a], ps[c]) && pr.antipodal(ps[b], ps[c]))
                        return TripleWitness{{ps[a], ps[b], ps[c]}, v};
            }
    }
    return std::nullopt;
}

// Parts antipodal to something outside their own block.
inline VertexSet cross_set(const Profile& pr, const DPartition& dp) {
    VertexSet out;
    for (int p = 0; p < pr.num_parts(); ++p) {
        int b = dp.block_of[p];
        for (int q : pr.antipodal_neighbors(p))
            if (dp.block_of[q] != b) {
                out.push_back(p);
                break;
            }
    }
    return out;
}

// The forced coloring on Upper u Cross. Pointwise determined: uppers get
// their own index; a crossing member of D_i gets i; a crossing member of
// D_{i,j} gets i or j away from its outside neighbor's side. Reports a
// conflict when a member of D_{i,j} has antipodal neighbors in both D_i
// and D_j.
inline std::variant<PartialColoring, PartialConflict> partial_coloring(const Profile& pr,
                                                                       const DPartition& dp) {
    PartialColoring pc;
    int l = dp.uppers.count();
    for (int k = 0; k < l; ++k) pc.color[dp.uppers.uppers[k]] = k + 1;
    VertexSet cross = cross_set(pr, dp);
    for (int p : cross) {
        const DBlock& b = dp.block(p);
        if (!b.is_pair()) {
            pc.color[p] = b.i;
            continue;
        }
        int in_i = -1, in_j = -1;
        for (int q : pr.antipodal_neighbors(p)) {
            const DBlock& nb = dp.block(q);
            if (nb.is_pair()) continue;
            if (nb.i == b.i && in_i < 0) in_i = q;
            if (nb.i == b.j && in_j < 0) in_j = q;
        }
        if (in_i >= 0 && in_j >= 0) return PartialConflict{p, in_i, in_j, b.i, b.j};
        if (in_j >= 0) pc.color[p] = b.i;       // neighbor on the j side
        else if (in_i >= 0) pc.color[p] = b.j;  // neighbor on the i side
        else pc.color[p] = b.i;                 // unconstrained by 3.4.(3)
    }
    return pc;
}

namespace detail {

// Chordless odd cycle from an odd closed walk: any chord splits the cycle
// into an odd and an even part; keep the odd part.
inline std::vector<int> shrink_odd_cycle(std::vector<int> cyc, const Profile& pr) {
    bool changed = true;
    while (changed) {
        changed = false;
        int n = static_cast<int>(cyc.size());
        for (int a = 0; a < n && !changed; ++a)
            for (int d = 2; d <= n - 2; ++d) {
                int b = (a + d) % n;
                if (!pr.antipodal(cyc[a], cyc[b])) continue;
                std::vector<int> side;
                for (int k = a; ; k = (k + 1) % n) {
                    side.push_back(cyc[k]);
                    if (k == b) break;
                }
                if (side.size() % 2 == 0) {  // take the other side
                    side.clear();
                    for (int k = b; ; k = (k + 1) % n) {
                        side.push_back(cyc[k]);
                        if (k == a) break;
                    }
                }
                cyc = std::move(side);
                changed = true;
                break;
            }
    }
    return cyc;
}

} // namespace detail

// Per-block 2-coloring by breadth-first propagation. Seeds are the smallest
// forced member of each component (smallest member when none is forced,
// taking the block's first palette color). Conflicts come out as the odd
// cycle or the forced-endpoint path discovered by the propagation tree.
inline std::variant<WeakColoring, TwoColorConflict> weak_coloring(const Profile& pr,
                                                                  const DPartition& dp,
                                                                  const PartialColoring& pc) {
    int l = dp.uppers.count();
    WeakColoring wc;
    wc.num_uppers = l;
    wc.color.assign(pr.num_parts(), 0);
    for (size_t bi = 0; bi < dp.blocks.size(); ++bi) {
        const DBlock& b = dp.blocks[bi];
        int c1 = b.i;
        int c2 = b.is_pair() ? b.j : l + 1;
        std::map<int, int> forced;
        for (int p : b.members) {
            auto it = pc.color.find(p);
            if (it != pc.color.end()) forced[p] = it->second;
        }
        std::map<int, int> parent;
        std::map<int, int> col;
        auto other = [&](int c) { return c == c1 ? c2 : c1; };
        // component seeds in deterministic order: forced members first
        std::vector<int> seeds;
        for (auto& [p, c] : forced) seeds.push_back(p);
        for (int p : b.members) seeds.push_back(p);
        for (int seed : seeds) {
            if (col.count(seed)) continue;
            int seed_color = forced.count(seed) ? forced[seed] : c1;
            col[seed] = seed_color;
            parent[seed] = -1;
            std::queue<int> q;
            q.push(seed);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : pr.antipodal_neighbors(u)) {
                    if (dp.block_of[w] != static_cast<int>(bi)) continue;
                    if (!col.count(w)) {
                        col[w] = other(col[u]);
                        parent[w] = u;
                        auto fit = forced.find(w);
                        if (fit != forced.end() && fit->second != col[w]) {
                            // forced-endpoint path: w up the propagation tree
                            std::vector<int> path;
                            for (int x = w; x != -1; x = parent[x]) path.push_back(x);
                            std::reverse(path.begin(), path.end());
                            int root = path.front();
                            bool even = path.size() % 2 == 0;
                            bool same = forced.at(root) == fit->second;
                            TwoColorConflict tc;
                            tc.kind = even ? TwoColorConflict::EvenPathSameColor
                                           : TwoColorConflict::OddPathDiffColor;
                            if (even != same)
                                throw std::logic_error("weak_coloring: parity bookkeeping");
                            tc.sequence = std::move(path);
                            tc.block = static_cast<int>(bi);
                            return tc;
                        }
                        q.push(w);
                    } else if (col[w] == col[u]) {
                        // odd cycle: join the tree paths of u and w
                        std::vector<int> up, wp;
                        for (int x = u; x != -1; x = parent[x]) up.push_back(x);
                        for (int x = w; x != -1; x = parent[x]) wp.push_back(x);
                        std::set<int> on_up(up.begin(), up.end());
                        int lca = -1;
                        for (int x : wp)
                            if (on_up.count(x)) {
                                lca = x;
                                break;
                            }
                        std::vector<int> cyc;
                        for (int x : up) {
                            cyc.push_back(x);
                            if (x == lca) break;
                        }
                        std::vector<int> tail;
                        for (int x : wp) {
                            if (x == lca) break;
                            tail.push_back(x);
                        }
                        std::reverse(tail.begin(), tail.end());
                        cyc.insert(cyc.end(), tail.begin(), tail.end());
                        if (cyc.size() % 2 == 0)
                            throw std::logic_error("weak_coloring: even cycle from conflict");
                        TwoColorConflict tc;
                        tc.kind = TwoColorConflict::OddCycle;
                        tc.sequence = detail::shrink_odd_cycle(std::move(cyc), pr);
                        tc.block = static_cast<int>(bi);
                        return tc;
                    }
                }
            }
        }
        for (auto& [p, c] : col) wc.color[p] = c;
    }
    return wc;
}

// Clause-by-clause check of the partial- and weak-coloring conditions.
inline std::vector<std::string> validate_weak_coloring(const Profile& pr, const DPartition& dp,
                                                       const WeakColoring& wc) {
    std::vector<std::string> bad;
    int l = dp.uppers.count();
    for (int k = 0; k < l; ++k)
        if (wc.color[dp.uppers.uppers[k]] != k + 1)
            bad.push_back("upper u" + std::to_string(k + 1) + " not colored " +
                          std::to_string(k + 1));
    for (int p = 0; p < pr.num_parts(); ++p) {
        const DBlock& b = dp.block(p);
        int c = wc.color[p];
        if (!b.is_pair()) {
            if (c != b.i && c != l + 1)
                bad.push_back("part " + std::to_string(p) + " outside palette of D_" +
                              std::to_string(b.i));
            for (int q : pr.antipodal_neighbors(p))
                if (dp.block_of[q] != dp.block_of[p] && c != b.i)
                    bad.push_back("crossing part " + std::to_string(p) + " not colored " +
                                  std::to_string(b.i));
        } else {
            if (c != b.i && c != b.j)
                bad.push_back("part " + std::to_string(p) + " outside palette of D_" +
                              std::to_string(b.i) + "," + std::to_string(b.j));
            for (int q : pr.antipodal_neighbors(p)) {
                const DBlock& nb = dp.block(q);
                if (nb.is_pair()) continue;
                if (nb.i == b.j && c != b.i)
                    bad.push_back("part " + std::to_string(p) + " must take color " +
                                  std::to_string(b.i));
                if (nb.i == b.i && c != b.j)
                    bad.push_back("part " + std::to_string(p) + " must take color " +
                                  std::to_string(b.j));
            }
        }
        for (int q : pr.antipodal_neighbors(p))
            if (q > p && dp.block_of[q] == dp.block_of[p] && wc.color[q] == c)
                bad.push_back("antipodal parts " + std::to_string(p) + "," +
                              std::to_string(q) + " share color inside a block");
    }
    return bad;
}

// Neighboring triples of a profile: part triples sharing a witness vertex.
inline std::vector<std::array<int, 3>> neighboring_triples(const Profile& pr) {
    std::set<std::array<int, 3>> out;
    for (const auto& [v, ps] : pr.neighboring) {
        int m = static_cast<int>(ps.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c) out.insert({ps[a], ps[b], ps[c]});
    }
    return {out.begin(), out.end()};
}

// Exhaustive strong-coloring search over set partitions (restricted growth
// strings) with incremental pruning: antipodal parts need distinct colors,
// neighboring triples at most two.
inline std::optional<std::vector<int>> strong_coloring_bruteforce(const Profile& pr,
                                                                  int max_parts = 9) {
    int s = pr.num_parts();
    if (s > max_parts)
        throw std::invalid_argument("strong_coloring_bruteforce: too many parts");
    if (s == 0) return std::vector<int>{};
    auto triples = neighboring_triples(pr);
    std::vector<std::vector<std::array<int, 3>>> by_max(s);
    for (const auto& t : triples) by_max[t[2]].push_back(t);
    std::vector<int> color(s, 0);
    std::function<std::optional<std::vector<int>>(int, int)> go =
        [&](int p, int used) -> std::optional<std::vector<int>> {
        if (p == s) return color;
        for (int c = 1; c <= used + 1; ++c) {
            bool ok = true;
            for (int q = 0; q < p && ok; ++q)
                if (color[q] == c && pr.antipodal(p, q)) ok = false;
            if (ok) {
                color[p] = c;
                for (const auto& t : by_max[p])
                    if (color[t[0]] != color[t[1]] && color[t[0]] != c && color[t[1]] != c) {
                        ok = false;
                        break;
                    }
            }
            if (!ok) {
                color[p] = 0;
                continue;
            }
            auto r = go(p + 1, std::max(used, c));
            if (r) return r;
            color[p] = 0;
        }
        return std::nullopt;
    };
    return go(0, 0);
}

// Full weak-coloring pipeline outcome for one quotiented profile.
struct WeakOutcome {
    std::optional<TripleWitness> triple;
    std::optional<PartialConflict> partial_conflict;
    std::optional<TwoColorConflict> two_color_conflict;
    std::optional<WeakColoring> coloring;
    DPartition dp;

    bool colorable() const { return coloring.has_value(); }
};

inline WeakOutcome run_weak_coloring(const Profile& pr) {
    WeakOutcome out;
    out.triple = find_full_antipodal_triple(pr);
    if (out.triple) return out;
    out.dp = d_partition(pr, upper_bounds(pr));
    auto pcv = partial_coloring(pr, out.dp);
    if (std::holds_alternative<PartialConflict>(pcv)) {
        out.partial_conflict = std::get<PartialConflict>(pcv);
        return out;
    }
    auto wcv = weak_coloring(pr, out.dp, std::get<PartialColoring>(pcv));
    if (std::holds_alternative<TwoColorConflict>(wcv)) {
        out.two_color_conflict = std::get<TwoColorConflict>(wcv);
        return out;
    }
    out.coloring = std::get<WeakColoring>(wcv);
    auto bad = validate_weak_coloring(pr, out.dp, *out.coloring);
    if (!bad.empty())
        throw std::logic_error("weak coloring failed validation: " + bad.front());
    return out;
}

inline std::string weak_coloring_to_text(const WeakColoring& wc) {
    std::ostringstream out;
    for (size_t p = 0; p < wc.color.size(); ++p)
        out << "p" << p << " -> " << wc.color[p] << "\n";
    return out.str();
}

inline std::string conflict_to_text(const TwoColorConflict& c) {
    std::ostringstream out;
    switch (c.kind) {
        case TwoColorConflict::OddCycle: out << "odd antipodal cycle"; break;
        case TwoColorConflict::EvenPathSameColor:
            out << "even path, equal forced endpoint colors";
            break;
        case TwoColorConflict::OddPathDiffColor:
            out << "odd path, distinct forced endpoint colors";
            break;
    }
    out << ":";
    for (int p : c.sequence) out << " p" << p;
    out << "\n";
    return out.str();
}

} // namespace pathgraph
