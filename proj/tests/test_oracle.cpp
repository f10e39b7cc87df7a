#include "pathgraph/oracle.hpp"
#include "testdata.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace pathgraph;

TEST_CASE("prufer enumeration covers all labeled trees") {
    // c = 4: the 16 labeled trees, pairwise distinct
    std::vector<int> seq(2, 0);
    std::set<std::vector<std::pair<int, int>>> trees;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto edges = detail::prufer_to_tree({a, b}, 4);
            REQUIRE(edges.size() == 3);
            std::sort(edges.begin(), edges.end());
            trees.insert(edges);
        }
    REQUIRE(trees.size() == 16);
}

TEST_CASE("oracle accepts the figure-1 graph") {
    SimpleGraph g = testdata::figure1();
    OracleResult r = oracle_is_path_graph(g);
    REQUIRE(r.is_path_graph);
    REQUIRE(r.realization);
    REQUIRE(verify_clique_path_tree(g, r.realization->host_tree));
}

TEST_CASE("oracle rejects the triple fan after all 16 trees") {
    SimpleGraph g = testdata::triple_fan();
    OracleResult r = oracle_is_path_graph(g);
    REQUIRE_FALSE(r.is_path_graph);
    REQUIRE(r.trees_checked == 16);
}

TEST_CASE("oracle trivial cases and errors") {
    REQUIRE(oracle_is_path_graph(testdata::complete(3)).is_path_graph);
    REQUIRE(oracle_is_path_graph(testdata::complete(4)).is_path_graph);
    REQUIRE_THROWS_AS(oracle_is_path_graph(testdata::cycle(4)), std::invalid_argument);
    SimpleGraph g = testdata::figure1();
    REQUIRE_THROWS_AS(oracle_is_path_graph(g, 3), std::invalid_argument);
}

TEST_CASE("realize_paths on the published tree") {
    SimpleGraph g = testdata::figure1();
    auto cs = maximal_cliques(g);
    auto at = [&](const std::vector<std::string>& names) {
        VertexSet k = vertex_set(g, names);
        for (size_t i = 0; i < cs.cliques.size(); ++i)
            if (cs.cliques[i] == k) return static_cast<int>(i);
        return -1;
    };
    int abc = at({"a", "b", "c"}), bce = at({"b", "c", "e"}), cde = at({"c", "d", "e"});
    int beg = at({"b", "e", "g"}), bfg = at({"b", "f", "g"}), egh = at({"e", "g", "h"});
    CliqueTree t{cs, {{abc, bce}, {cde, bce}, {bce, beg}, {beg, bfg}, {beg, egh}}};
    PathRealization r = realize_paths(g, t);
    // vertex b rides through abc - bce - beg - bfg
    auto find_path = [&](const std::string& l) {
        for (const auto& [label, path] : r.vertex_paths)
            if (label == l) return path;
        return std::vector<int>{};
    };
    REQUIRE(find_path("b") == std::vector<int>{abc, bce, beg, bfg});
    REQUIRE(find_path("a") == std::vector<int>{abc});
    std::string text = realization_to_text(g, r);
    REQUIRE(text.find("b: [a b c] [b c e] [b e g] [b f g]") != std::string::npos);
}

TEST_CASE("realize_paths on K4 is a single node") {
    SimpleGraph g = testdata::complete(4);
    CliqueTree t{maximal_cliques(g), {}};
    PathRealization r = realize_paths(g, t);
    for (const auto& [label, path] : r.vertex_paths) REQUIRE(path == std::vector<int>{0});
}

TEST_CASE("realize_paths rejects non-path trees") {
    SimpleGraph g = testdata::figure1();
    auto cs = maximal_cliques(g);
    // star at bce fails the path condition
    auto at = [&](const std::vector<std::string>& names) {
        VertexSet k = vertex_set(g, names);
        for (size_t i = 0; i < cs.cliques.size(); ++i)
            if (cs.cliques[i] == k) return static_cast<int>(i);
        return -1;
    };
    int bce = at({"b", "c", "e"});
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i)
        if (i != bce) edges.emplace_back(std::min(i, bce), std::max(i, bce));
    CliqueTree star{cs, edges};
    REQUIRE_THROWS_AS(realize_paths(g, star), std::invalid_argument);
}
