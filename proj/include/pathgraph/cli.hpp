#pragma once

// Command line front end. Subcommands: recognize, oracle, attachedness,
// gen, selftest. Exit codes for recognize: 0 path graph, 1 not a path
// graph, 2 not chordal, 3 input/parse trouble; oracle exits 4 when the
// clique cap is hit. Usage errors take CLI11's own codes.
//
// Default caps come from PATHGRAPH_MAX_CLIQUES (oracle enumeration) and
// PATHGRAPH_MAX_PARTS (forbidden-subgraph search) when set.

#include "pathgraph/recognizer.hpp"
#include "pathgraph/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace pathgraph {

namespace cli_detail {

inline int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    int parsed = std::atoi(v);
    return parsed > 0 ? parsed : fallback;
}

inline SimpleGraph load_graph(const std::string& path, std::ostream& err, bool& ok) {
    ok = false;
    std::ifstream in(path);
    if (!in) {
        err << "cannot open " << path << "\n";
        return {};
    }
    std::vector<std::string> warnings;
    SimpleGraph g = parse_edge_list(in, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    ok = true;
    return g;
}

inline std::string describe_witness(const Profile& pr, const ForbiddenWitness& w) {
    std::ostringstream out;
    if (w.kind == ForbiddenWitness::FullTriple) {
        out << "full antipodal triple {";
        for (int i = 0; i < 3; ++i)
            out << (i ? ", " : "") << part_label(pr, w.triple.parts[i]);
        out << "} at vertex " << pr.vertex_name(w.triple.witness_vertex);
    } else {
        out << family_name(w.family) << "_" << (2 * w.parameter + 1)
            << (w.induced ? " induced" : " subgraph") << " embedding:";
        for (size_t t = 0; t < w.mapping.size(); ++t)
            out << " t" << t << "->" << part_label(pr, w.mapping[t]);
    }
    return out.str();
}

inline int cmd_recognize(const std::string& file, bool certificate,
                         const std::string& dot_dir, bool no_realization, int oracle_cap,
                         std::ostream& out, std::ostream& err) {
    bool ok = false;
    SimpleGraph g = load_graph(file, err, ok);
    if (!ok) return 3;
    RecognizeOptions opt;
    opt.attach_realizations = !no_realization;
    opt.oracle_cap = oracle_cap;
    std::vector<Profile> profiles;
    if (!dot_dir.empty())
        opt.profile_observer = [&](const Profile& pr) {
            if (pr.quotiented) profiles.push_back(pr);
        };
    Verdict v = recognize(g, opt);
    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (size_t i = 0; i < profiles.size(); ++i) {
            std::ofstream f(dot_dir + "/separator-" + std::to_string(i) + ".dot");
            f << profile_to_dot(profiles[i]);
        }
    }
    switch (v.kind) {
        case Verdict::NotChordal: {
            out << "verdict: not chordal\nhole:";
            for (const auto& l : v.hole) out << " " << l;
            out << "\n";
            if (certificate) out << verdict_to_json(v).dump(2) << "\n";
            return 2;
        }
        case Verdict::NotPathGraph: {
            out << "verdict: not a path graph\nseparator:";
            for (const auto& l : v.failure->separator) out << " " << l;
            out << "\ncertificate: " << describe_witness(v.failure->profile, v.failure->witness)
                << "\n";
            if (certificate) {
                nlohmann::json j = verdict_to_json(v);
                ForbiddenWitness back = witness_from_json(v.failure->profile, j["certificate"]);
                j["verified"] = verify_certificate(v.failure->profile, back);
                out << j.dump(2) << "\n";
            }
            return 1;
        }
        case Verdict::PathGraph: break;
    }
    out << "verdict: path graph\n";
    for (const auto& ev : v.evidence) {
        out << "separator {";
        for (size_t i = 0; i < ev.separator.size(); ++i)
            out << (i ? " " : "") << ev.separator[i];
        out << "}:";
        for (int p = 0; p < ev.profile.num_parts(); ++p)
            out << " " << part_label(ev.profile, p) << "->" << ev.coloring.color[p];
        out << "\n";
    }
    for (const auto& cr : v.realizations) {
        out << "clique path tree (component of " << cr.component.label(0) << "):\n";
        out << realization_to_text(cr.component, cr.realization);
    }
    if (certificate) out << verdict_to_json(v).dump(2) << "\n";
    return 0;
}

inline int cmd_oracle(const std::string& file, int max_cliques, bool dot, std::ostream& out,
                      std::ostream& err) {
    bool ok = false;
    SimpleGraph g = load_graph(file, err, ok);
    if (!ok) return 3;
    ChordalityResult cr = is_chordal(g);
    if (!cr.chordal) {
        out << "not chordal\n";
        return 2;
    }
    bool yes = true;
    long long trees = 0;
    for (const VertexSet& comp : connected_components(g)) {
        SimpleGraph cg = induced_subgraph(g, comp);
        int c = static_cast<int>(maximal_cliques(cg).cliques.size());
        if (c > max_cliques) {
            err << "component exceeds the clique cap (" << c << " > " << max_cliques << ")\n";
            return 4;
        }
        OracleResult r = oracle_is_path_graph(cg, max_cliques);
        trees += r.trees_checked;
        if (!r.is_path_graph) {
            yes = false;
            continue;
        }
        out << realization_to_text(cg, *r.realization);
        if (dot) out << clique_tree_to_dot(cg, r.realization->host_tree);
    }
    out << (yes ? "path graph" : "not a path graph") << " (" << trees
        << " trees examined)\n";
    return yes ? 0 : 1;
}

inline int cmd_attachedness(const std::string& file, int index, bool list, std::ostream& out,
                            std::ostream& err) {
    bool ok = false;
    SimpleGraph g = load_graph(file, err, ok);
    if (!ok) return 3;
    if (!is_chordal(g).chordal) {
        err << "input is not chordal\n";
        return 2;
    }
    std::vector<Profile> profiles;
    for (const VertexSet& comp : connected_components(g)) {
        SimpleGraph cg = induced_subgraph(g, comp);
        for (const VertexSet& q : clique_separators(cg))
            profiles.push_back(build_profile(cg, q));
    }
    if (list) {
        for (size_t i = 0; i < profiles.size(); ++i) {
            out << i << ": {";
            for (size_t k = 0; k < profiles[i].separator.size(); ++k)
                out << (k ? " " : "") << profiles[i].vertex_name(profiles[i].separator[k]);
            out << "} with " << profiles[i].num_parts() << " parts\n";
        }
        return 0;
    }
    if (index < 0 || index >= static_cast<int>(profiles.size())) {
        err << "separator index out of range (have " << profiles.size() << ")\n";
        return 3;
    }
    out << profile_to_dot(profiles[index]);
    return 0;
}

inline int cmd_gen(int n, uint64_t seed, int vertices, std::ostream& out) {
    SimpleGraph g = gen_subtree_model(seed, n, vertices);
    out << serialize_edge_list(g);
    return 0;
}

inline int cmd_selftest(long samples, int max_n, uint64_t seed, int max_parts,
                        std::ostream& out) {
    SelftestConfig cfg;
    cfg.gen_samples = samples;
    cfg.profile_samples = std::min<long>(1000, samples > 0 ? std::max<long>(samples, 200) : 0);
    cfg.gplus_samples = std::min<long>(1000, samples);
    cfg.max_host = std::max(1, max_n);
    cfg.seed = seed;
    cfg.forbidden_cap = max_parts;
    cfg.log = &out;
    if (samples == 0)
        out << "warning: --samples 0 leaves the sampled suites vacuous\n";
    auto results = run_acceptance(cfg);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    out << (all ? "selftest: all suites passed\n" : "selftest: FAILURES\n");
    return all ? 0 : 1;
}

} // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"path graph recognition via per-separator weak colorings"};
    app.require_subcommand(1);
    int oracle_cap = cli_detail::env_cap("PATHGRAPH_MAX_CLIQUES", 9);
    int max_parts = cli_detail::env_cap("PATHGRAPH_MAX_PARTS", 12);

    auto* rec = app.add_subcommand("recognize", "decide path-graph membership");
    std::string rec_file, dot_dir;
    bool certificate = false, no_realization = false;
    rec->add_option("file", rec_file, "edge-list file")->required();
    rec->add_flag("--certificate", certificate, "print the machine-readable certificate");
    rec->add_option("--dot-dir", dot_dir, "write one attachedness DOT per separator");
    rec->add_flag("--no-realization", no_realization, "skip the oracle realization");

    auto* orc = app.add_subcommand("oracle", "exhaustive clique-tree enumeration");
    std::string orc_file;
    bool orc_dot = false;
    orc->add_option("file", orc_file, "edge-list file")->required();
    orc->add_option("--max-cliques", oracle_cap, "clique cap for enumeration");
    orc->add_flag("--dot", orc_dot, "also print the host tree as DOT");

    auto* att = app.add_subcommand("attachedness", "export an attachedness graph");
    std::string att_file, att_format = "dot";
    int att_index = 0;
    bool att_list = false;
    att->add_option("file", att_file, "edge-list file")->required();
    att->add_option("--separator", att_index, "separator index (see --list)");
    att->add_option("--format", att_format, "output format (dot)");
    att->add_flag("--list", att_list, "list separators instead of exporting");

    auto* gen = app.add_subcommand("gen", "generate a random chordal graph");
    std::string model = "subtree";
    int gen_n = 5, gen_vertices = -1;
    uint64_t gen_seed = 0;
    gen->add_option("--model", model, "generator model (subtree)");
    gen->add_option("--n", gen_n, "host tree nodes")->required();
    gen->add_option("--seed", gen_seed, "random seed")->required();
    gen->add_option("--vertices", gen_vertices, "vertex count (default: derived)");

    auto* st = app.add_subcommand("selftest", "run the acceptance suites");
    long st_samples = 10000;
    int st_maxn = 8;
    uint64_t st_seed = 20240501;
    st->add_option("--samples", st_samples, "generated graph count");
    st->add_option("--max-n", st_maxn, "largest host tree size");
    st->add_option("--seed", st_seed, "random seed");

    std::vector<const char*> argv;
    argv.push_back("pathgraph");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (rec->parsed())
            return cli_detail::cmd_recognize(rec_file, certificate, dot_dir, no_realization,
                                             oracle_cap, out, err);
        if (orc->parsed()) return cli_detail::cmd_oracle(orc_file, oracle_cap, orc_dot, out, err);
        if (att->parsed()) {
            if (att_format != "dot") {
                err << "unsupported format " << att_format << "\n";
                return 3;
            }
            return cli_detail::cmd_attachedness(att_file, att_index, att_list, out, err);
        }
        if (gen->parsed()) {
            if (model != "subtree") {
                err << "unknown model " << model << "\n";
                return 3;
            }
            return cli_detail::cmd_gen(gen_n, gen_seed, gen_vertices, out);
        }
        if (st->parsed())
            return cli_detail::cmd_selftest(st_samples, st_maxn, st_seed, max_parts, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}

} // namespace pathgraph
