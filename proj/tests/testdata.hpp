#pragma once

// Shared fixture graphs used across the test suites.

#include "pathgraph/graph.hpp"

namespace testdata {

// 8-vertex path graph with cliques abc, bce, beg, bfg, cde, egh.
inline const char* kFigure1 =
    "a b\na c\nb c\nc d\nc e\nd e\nb e\nb g\ne g\nb f\nf g\ne h\ng h\n";

// Triple fan: 4-clique {x,y1,y2,y3} plus b_i adjacent to x and y_i.
// Not a path graph; the 4-clique carries a full antipodal triple at x.
inline const char* kTripleFan =
    "x y1\nx y2\nx y3\ny1 y2\ny1 y3\ny2 y3\n"
    "b1 x\nb1 y1\nb2 x\nb2 y2\nb3 x\nb3 y3\n";

// Triangle {z,b,c} with a adjacent to b,c and d adjacent to b.
// At Q = {z,b,c} the part {d} is dominated by the part {a}.
inline const char* kChain =
    "z b\nz c\nb c\na b\na c\nd b\n";

// Triangle {z,b,c} with two pendant parts both attached to {b,c};
// the two parts are equivalent and merge under the quotient.
inline const char* kTwins =
    "z b\nz c\nb c\na1 b\na1 c\na2 b\na2 c\n";

inline pathgraph::SimpleGraph figure1() { return pathgraph::parse_edge_list(kFigure1); }
inline pathgraph::SimpleGraph triple_fan() { return pathgraph::parse_edge_list(kTripleFan); }
inline pathgraph::SimpleGraph chain_graph() { return pathgraph::parse_edge_list(kChain); }
inline pathgraph::SimpleGraph twins_graph() { return pathgraph::parse_edge_list(kTwins); }

inline pathgraph::SimpleGraph cycle(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    for (int i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
    return pathgraph::SimpleGraph::make(labels, edges);
}

inline pathgraph::SimpleGraph complete(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("k" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
    return pathgraph::SimpleGraph::make(labels, edges);
}

} // namespace testdata
