#include "pathgraph/recognizer.hpp"
#include "testdata.hpp"
#include "pathgraph/selftest.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pathgraph;

namespace {

// mirrored figure-1: a second f/g/h-style component hanging on b and e;
// chordal, but the two multi-trace twins force a full antipodal triple.
SimpleGraph mirrored_figure1() {
    std::string text = std::string(testdata::kFigure1) +
                       "b g2\ne g2\nb f2\nf2 g2\ne h2\ng2 h2\n";
    return parse_edge_list(text);
}

} // namespace

TEST_CASE("recognize figure-1 as a path graph with evidence") {
    SimpleGraph g = testdata::figure1();
    Verdict v = recognize(g);
    REQUIRE(v.kind == Verdict::PathGraph);
    REQUIRE(v.evidence.size() == 2);
    REQUIRE(v.evidence[0].separator == std::vector<std::string>{"b", "c", "e"});
    REQUIRE(v.evidence[1].separator == std::vector<std::string>{"b", "e", "g"});
    for (const auto& ev : v.evidence) {
        DPartition dp = d_partition(ev.profile, upper_bounds(ev.profile));
        REQUIRE(validate_weak_coloring(ev.profile, dp, ev.coloring).empty());
    }
    REQUIRE(v.realizations.size() == 1);
    REQUIRE(verify_clique_path_tree(v.realizations[0].component,
                                    v.realizations[0].realization.host_tree));
}

TEST_CASE("recognize the triple fan with a verified full-triple certificate") {
    SimpleGraph g = testdata::triple_fan();
    Verdict v = recognize(g);
    REQUIRE(v.kind == Verdict::NotPathGraph);
    REQUIRE(v.failure);
    REQUIRE(v.failure->separator == std::vector<std::string>{"x", "y1", "y2", "y3"});
    REQUIRE(v.failure->witness.kind == ForbiddenWitness::FullTriple);
    REQUIRE(v.failure->profile.vertex_name(v.failure->witness.triple.witness_vertex) == "x");
    REQUIRE(verify_certificate(v.failure->profile, v.failure->witness));
}

TEST_CASE("recognize C4 as not chordal") {
    Verdict v = recognize(testdata::cycle(4));
    REQUIRE(v.kind == Verdict::NotChordal);
    REQUIRE(v.hole.size() == 4);
}

TEST_CASE("recognize handles disconnected and trivial inputs") {
    REQUIRE(recognize(SimpleGraph{}).kind == Verdict::PathGraph);
    SimpleGraph two = parse_edge_list("a b\nc d\n");
    REQUIRE(recognize(two).kind == Verdict::PathGraph);
    SimpleGraph mixed = parse_edge_list(std::string(testdata::kTripleFan) + "q r\n");
    REQUIRE(recognize(mixed).kind == Verdict::NotPathGraph);
}

TEST_CASE("the mirrored component graph stops being a path graph") {
    SimpleGraph h = mirrored_figure1();
    REQUIRE(is_chordal(h).chordal);
    Verdict v = recognize(h);
    REQUIRE(v.kind == Verdict::NotPathGraph);
    REQUIRE(verify_certificate(v.failure->profile, v.failure->witness));
}

TEST_CASE("g_plus") {
    SECTION("K1 becomes K2") {
        SimpleGraph g = parse_edge_list("v a\n");
        SimpleGraph gp = g_plus(g);
        REQUIRE(gp.num_vertices() == 2);
        REQUIRE(gp.num_edges() == 1);
    }
    SECTION("figure-1 grows to 16 vertices, 21 edges") {
        SimpleGraph gp = g_plus(testdata::figure1());
        REQUIRE(gp.num_vertices() == 16);
        REQUIRE(gp.num_edges() == 21);
    }
    SECTION("path-graph status is invariant") {
        REQUIRE(recognize(g_plus(testdata::figure1())).kind == Verdict::PathGraph);
        REQUIRE(recognize(g_plus(testdata::triple_fan())).kind == Verdict::NotPathGraph);
    }
    SECTION("pendant labels dodge collisions") {
        SimpleGraph g = parse_edge_list("a a+\n");
        SimpleGraph gp = g_plus(g);
        REQUIRE(gp.num_vertices() == 4);
        REQUIRE(gp.index_of("a++") >= 0);
    }
}

TEST_CASE("extract_certificate from a partial conflict") {
    // uppers 0,1; part 2 in D_{1,2}; 3 in D_1; 4 in D_2; conflict at 2
    std::vector<std::pair<int, int>> dom{{2, 0}, {2, 1}, {3, 0}, {4, 1}};
    SECTION("non-antipodal side neighbors give DF_5") {
        Profile pr = profile_from_relations(
            5, {{2, 3}, {2, 4}, {0, 1}, {0, 4}, {1, 3}}, dom);
        DPartition dp = d_partition(pr, upper_bounds(pr));
        auto res = partial_coloring(pr, dp);
        auto c = std::get<PartialConflict>(res);
        ForbiddenWitness w = extract_certificate(pr, dp, c);
        REQUIRE(w.family == Family::DF);
        REQUIRE(w.parameter == 2);
        REQUIRE(w.mapping == std::vector<int>{3, 2, 4, 0, 1});
        REQUIRE(verify_certificate(pr, w));
    }
    SECTION("antipodal side neighbors give W1_3") {
        Profile pr = profile_from_relations(
            5, {{2, 3}, {2, 4}, {3, 4}, {0, 1}, {0, 4}, {1, 3}}, dom);
        DPartition dp = d_partition(pr, upper_bounds(pr));
        auto c = std::get<PartialConflict>(partial_coloring(pr, dp));
        ForbiddenWitness w = extract_certificate(pr, dp, c);
        REQUIRE(w.family == Family::W1);
        REQUIRE(w.parameter == 1);
        REQUIRE(w.mapping == std::vector<int>{4, 2, 3, 0});
        REQUIRE(verify_certificate(pr, w));
    }
}

TEST_CASE("extract_certificate from 2-coloring conflicts") {
    SECTION("odd cycle becomes a W0 wheel over the upper") {
        Profile pr = profile_from_relations(
            6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}},
            {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
        DPartition dp = d_partition(pr, upper_bounds(pr));
        auto pc = std::get<PartialColoring>(partial_coloring(pr, dp));
        auto tc = std::get<TwoColorConflict>(weak_coloring(pr, dp, pc));
        ForbiddenWitness w = extract_certificate(pr, dp, tc);
        REQUIRE(w.family == Family::W0);
        REQUIRE(w.parameter == 2);
        REQUIRE(w.mapping.size() == 6);
        REQUIRE(w.mapping.back() == 0);
        REQUIRE(verify_certificate(pr, w));
    }
    SECTION("even path with one shared forcer becomes W1") {
        // u1=0; 1,2 in D_1; u2=3 antipodal to both path ends and to u1
        Profile pr = profile_from_relations(
            4, {{1, 2}, {1, 3}, {2, 3}, {0, 3}}, {{1, 0}, {2, 0}});
        DPartition dp = d_partition(pr, upper_bounds(pr));
        auto pc = std::get<PartialColoring>(partial_coloring(pr, dp));
        auto tc = std::get<TwoColorConflict>(weak_coloring(pr, dp, pc));
        REQUIRE(tc.kind == TwoColorConflict::EvenPathSameColor);
        ForbiddenWitness w = extract_certificate(pr, dp, tc);
        REQUIRE(w.family == Family::W1);
        REQUIRE(w.parameter == 1);
        REQUIRE(w.mapping == std::vector<int>{3, 1, 2, 0});
        REQUIRE(verify_certificate(pr, w));
    }
    SECTION("even path with two unrelated forcers becomes F") {
        // u1=0; path 1,2 in D_1; forcers u2=3, u3=4
        Profile pr = profile_from_relations(
            5, {{1, 2}, {1, 3}, {2, 4}, {0, 3}, {0, 4}}, {{1, 0}, {2, 0}});
        DPartition dp = d_partition(pr, upper_bounds(pr));
        auto pc = std::get<PartialColoring>(partial_coloring(pr, dp));
        auto tc = std::get<TwoColorConflict>(weak_coloring(pr, dp, pc));
        ForbiddenWitness w = extract_certificate(pr, dp, tc);
        REQUIRE(w.family == Family::F);
        REQUIRE(w.parameter == 2);
        REQUIRE(w.mapping == std::vector<int>{3, 1, 2, 4, 0});
        REQUIRE(verify_certificate(pr, w));
    }
    SECTION("antipodal forcers close the rim into Ftilde") {
        Profile pr = profile_from_relations(
            5, {{1, 2}, {1, 3}, {2, 4}, {0, 3}, {0, 4}, {3, 4}}, {{1, 0}, {2, 0}});
        DPartition dp = d_partition(pr, upper_bounds(pr));
        auto pc = std::get<PartialColoring>(partial_coloring(pr, dp));
        auto tc = std::get<TwoColorConflict>(weak_coloring(pr, dp, pc));
        ForbiddenWitness w = extract_certificate(pr, dp, tc);
        REQUIRE(w.family == Family::Ftilde);
        REQUIRE(w.parameter == 2);
        REQUIRE(verify_certificate(pr, w));
    }
    SECTION("odd path in a pair block becomes DF") {
        // uppers 0,1; path 2,3,4 in D_{1,2}; forcer 5 in D_1, forcer 6 in D_2
        Profile pr = profile_from_relations(
            7,
            {{2, 3}, {3, 4}, {2, 5}, {4, 6}, {0, 1}, {1, 5}, {0, 6}},
            {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {5, 0}, {6, 1}});
        DPartition dp = d_partition(pr, upper_bounds(pr));
        auto pc = std::get<PartialColoring>(partial_coloring(pr, dp));
        auto tc = std::get<TwoColorConflict>(weak_coloring(pr, dp, pc));
        REQUIRE(tc.kind == TwoColorConflict::OddPathDiffColor);
        ForbiddenWitness w = extract_certificate(pr, dp, tc);
        REQUIRE(w.family == Family::DF);
        REQUIRE(w.parameter == 3);
        REQUIRE(w.mapping == std::vector<int>{5, 2, 3, 4, 6, 0, 1});
        REQUIRE(verify_certificate(pr, w));
    }
}

TEST_CASE("verify_certificate rejects fabrications") {
    SimpleGraph g = testdata::figure1();
    Profile pr = quotient_profile(build_profile(g, vertex_set(g, {"b", "c", "e"})));
    SECTION("the empty antipodal triangle has no witness vertex") {
        for (int v : pr.separator) {
            ForbiddenWitness w;
            w.kind = ForbiddenWitness::FullTriple;
            w.triple = TripleWitness{{0, 1, 2}, v};
            REQUIRE_FALSE(verify_certificate(pr, w));
        }
    }
    SECTION("empty and short mappings fail") {
        ForbiddenWitness w;
        w.kind = ForbiddenWitness::TemplateEmbedding;
        w.family = Family::W0;
        w.parameter = 1;
        REQUIRE_FALSE(verify_certificate(pr, w));
    }
    SECTION("wrong edge colors fail") {
        SimpleGraph tf = testdata::triple_fan();
        Profile tfp =
            quotient_profile(build_profile(tf, vertex_set(tf, {"x", "y1", "y2", "y3"})));
        ForbiddenWitness w;
        w.kind = ForbiddenWitness::TemplateEmbedding;
        w.family = Family::W0;
        w.parameter = 1;
        w.mapping = {0, 1, 2, 0};  // not injective
        REQUIRE_FALSE(verify_certificate(tfp, w));
    }
}

TEST_CASE("find_forbidden") {
    SECTION("the pendant triple fan shows an induced W0_3") {
        SimpleGraph gp = g_plus(testdata::triple_fan());
        VertexSet q = vertex_set(gp, {"x", "y1", "y2", "y3"});
        Profile pr = quotient_profile(build_profile(gp, q));
        auto m = find_forbidden(attachedness_graph(pr), all_families(), true);
        REQUIRE(m);
        REQUIRE_FALSE(m->is_triple);
        REQUIRE(m->family == Family::W0);
        REQUIRE(m->parameter == 1);
    }
    SECTION("figure-1's empty antipodal triangle matches nothing") {
        SimpleGraph g = testdata::figure1();
        Profile pr = quotient_profile(build_profile(g, vertex_set(g, {"b", "c", "e"})));
        auto fullness = [&](int a, int b, int c) {
            for (const auto& [v, ps] : pr.neighboring)
                if (setops::contains(ps, a) && setops::contains(ps, b) &&
                    setops::contains(ps, c))
                    return true;
            return false;
        };
        auto m = find_forbidden(attachedness_graph(pr), subgraph_families(), false, fullness);
        REQUIRE_FALSE(m.has_value());
    }
    SECTION("empty family list finds nothing") {
        SimpleGraph g = testdata::triple_fan();
        Profile pr =
            quotient_profile(build_profile(g, vertex_set(g, {"x", "y1", "y2", "y3"})));
        auto m = find_forbidden(attachedness_graph(pr), {}, false);
        REQUIRE_FALSE(m.has_value());
    }
    SECTION("vertex cap is enforced") {
        ColoredGraph big(13);
        REQUIRE_THROWS_AS(find_forbidden(big, all_families(), false), std::invalid_argument);
    }
}

TEST_CASE("witness JSON round-trips through verification") {
    SimpleGraph g = testdata::triple_fan();
    Verdict v = recognize(g);
    nlohmann::json j = witness_to_json(v.failure->profile, v.failure->witness);
    ForbiddenWitness back = witness_from_json(v.failure->profile, j);
    REQUIRE(verify_certificate(v.failure->profile, back));
    nlohmann::json vj = verdict_to_json(v);
    REQUIRE(vj["verdict"] == "not-path-graph");
    REQUIRE(vj["certificate"]["kind"] == "full-antipodal-triple");
}

TEST_CASE("crafted instances drive every certificate shape") {
    auto instances = pathgraph::selftest_detail::crafted_instances();
    REQUIRE(instances.size() == 9);
    std::map<std::string, std::pair<Family, int>> expect{
        {"W0_5 odd cycle", {Family::W0, 2}},
        {"DF_5 partial conflict", {Family::DF, 2}},
        {"W1_3 partial conflict", {Family::W1, 1}},
        {"W1_3 even path", {Family::W1, 1}},
        {"F_5 even path", {Family::F, 2}},
        {"Ftilde_5 even path", {Family::Ftilde, 2}},
        {"DF_7 odd path", {Family::DF, 3}},
    };
    for (auto& [name, g] : instances) {
        INFO(name);
        REQUIRE(is_chordal(g).chordal);
        Verdict v = recognize(g);
        REQUIRE(v.kind == Verdict::NotPathGraph);
        if (name == "full antipodal triple" || name == "mirrored figure-1") {
            REQUIRE(v.failure->witness.kind == ForbiddenWitness::FullTriple);
            continue;
        }
        REQUIRE(v.failure->witness.kind == ForbiddenWitness::TemplateEmbedding);
        REQUIRE(v.failure->witness.family == expect.at(name).first);
        REQUIRE(v.failure->witness.parameter == expect.at(name).second);
        REQUIRE(verify_certificate(v.failure->profile, v.failure->witness));
        // the oracle agrees wherever exhaustion is cheap
        if (maximal_cliques(g).cliques.size() <= 8)
            REQUIRE_FALSE(oracle_is_path_graph(g).is_path_graph);
    }
}

TEST_CASE("clique tree JSON carries cliques and edges") {
    SimpleGraph g = testdata::figure1();
    CliqueTree t = build_clique_tree(g);
    nlohmann::json j = clique_tree_to_json(g, t);
    REQUIRE(j["cliques"].size() == 6);
    REQUIRE(j["edges"].size() == 5);
    REQUIRE(j["cliques"][0] == nlohmann::json({"a", "b", "c"}));
}
