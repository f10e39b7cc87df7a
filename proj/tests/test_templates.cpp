#include "pathgraph/colored_graph.hpp"
#include "pathgraph/coloring.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pathgraph;

namespace {

int antipodal_edges(const ColoredGraph& g) {
    int c = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (g.at(a, b) == EdgeColor::Antipodal) ++c;
    return c;
}

// Uncolored view: is it K_n minus exactly the given non-edges?
std::vector<std::pair<int, int>> missing_edges(const ColoredGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (g.at(a, b) == EdgeColor::None) out.emplace_back(a, b);
    return out;
}

} // namespace

TEST_CASE("make_template shapes") {
    SECTION("W0 with k=1: antipodal triangle plus all-dominance hub") {
        Template t = make_template(Family::W0, 1);
        REQUIRE(t.order() == 4);
        REQUIRE(t.graph.num_edges() == 6);
        REQUIRE(antipodal_edges(t.graph) == 3);
    }
    SECTION("W1 with k=1 swaps one spoke to antipodal") {
        Template t = make_template(Family::W1, 1);
        REQUIRE(t.order() == 4);
        REQUIRE(antipodal_edges(t.graph) == 4);
    }
    SECTION("F with n=2: 5 vertices, 7 edges, shadow is the 5-fan") {
        Template t = make_template(Family::F, 2);
        REQUIRE(t.order() == 5);
        REQUIRE(t.graph.num_edges() == 7);
        REQUIRE(antipodal_edges(t.graph) == 5);
        // the 5-fan: hub universal, path 0-1-2-3, missing chords of the path
        int hub = 4;
        for (int i = 0; i < 4; ++i) REQUIRE(t.graph.at(hub, i) != EdgeColor::None);
        REQUIRE(missing_edges(t.graph) ==
                std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
    }
    SECTION("Ftilde with n=2: even rim cycle, universal hub") {
        Template t = make_template(Family::Ftilde, 2);
        REQUIRE(t.order() == 5);
        REQUIRE(t.graph.num_edges() == 8);
        REQUIRE(antipodal_edges(t.graph) == 6);
    }
    SECTION("DF with n=2 is K5 minus one edge") {
        Template t = make_template(Family::DF, 2);
        REQUIRE(t.order() == 5);
        REQUIRE(t.graph.num_edges() == 9);
        REQUIRE(missing_edges(t.graph) == std::vector<std::pair<int, int>>{{0, 2}});
    }
    SECTION("parameters below range are rejected") {
        REQUIRE_THROWS_AS(make_template(Family::W0, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(make_template(Family::F, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(make_template(Family::DF, 1), std::invalid_argument);
    }
}

TEST_CASE("templates admit no strong coloring as profiles") {
    for (Family fam : all_families()) {
        int lo = (fam == Family::W0 || fam == Family::W1) ? 1 : 2;
        for (int p = lo; p <= lo + 1; ++p) {
            Template t = make_template(fam, p);
            Profile pr = template_as_profile(t);
            INFO(family_name(fam) << " parameter " << p);
            REQUIRE_FALSE(strong_coloring_bruteforce(pr, 12).has_value());
        }
    }
}

TEST_CASE("colored embedding") {
    SECTION("every template embeds into itself, induced") {
        for (Family fam : all_families()) {
            int lo = (fam == Family::W0 || fam == Family::W1) ? 1 : 2;
            Template t = make_template(fam, lo);
            REQUIRE(find_colored_embedding(t.graph, t.graph, true).has_value());
        }
    }
    SECTION("F sits inside Ftilde and DF as a plain subgraph") {
        Template f = make_template(Family::F, 2);
        REQUIRE(find_colored_embedding(f.graph, make_template(Family::Ftilde, 2).graph,
                                       false)
                    .has_value());
        REQUIRE(find_colored_embedding(f.graph, make_template(Family::DF, 2).graph, false)
                    .has_value());
        REQUIRE(find_colored_embedding(f.graph, make_template(Family::Ftilde, 3).graph,
                                       false)
                    .has_value() == false);
    }
    SECTION("induced embedding respects non-edges") {
        Template f = make_template(Family::F, 2);
        Template ft = make_template(Family::Ftilde, 2);
        REQUIRE_FALSE(find_colored_embedding(f.graph, ft.graph, true).has_value());
    }
    SECTION("colors matter") {
        Template w0 = make_template(Family::W0, 1);
        Template w1 = make_template(Family::W1, 1);
        REQUIRE_FALSE(find_colored_embedding(w0.graph, w1.graph, false).has_value());
        REQUIRE_FALSE(colored_isomorphic(w0.graph, w1.graph));
        REQUIRE(colored_isomorphic(w0.graph, w0.graph));
    }
    SECTION("mapping preserves edges") {
        Template f = make_template(Family::F, 2);
        Template df = make_template(Family::DF, 2);
        auto m = *find_colored_embedding(f.graph, df.graph, false);
        for (int a = 0; a < f.graph.n; ++a)
            for (int b = a + 1; b < f.graph.n; ++b)
                if (f.graph.at(a, b) != EdgeColor::None)
                    REQUIRE(df.graph.at(m[a], m[b]) == f.graph.at(a, b));
    }
}

TEST_CASE("attachedness graph of a profile") {
    Profile pr = profile_from_relations(3, {{0, 1}}, {{2, 0}});
    ColoredGraph cg = attachedness_graph(pr);
    REQUIRE(cg.at(0, 1) == EdgeColor::Antipodal);
    REQUIRE(cg.at(0, 2) == EdgeColor::Dominance);
    REQUIRE(cg.at(1, 2) == EdgeColor::None);
    std::string dot = colored_graph_to_dot(cg);
    REQUIRE(dot.find("style=dotted") != std::string::npos);
}
