// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/bicombing.hpp"
#include "helly/constructions.hpp"
#include "helly/geometry.hpp"
#include "helly/hull.hpp"
#include "helly/hypergraph.hpp"
#include "helly/io.hpp"
#include "helly/recognition.hpp"
#include "helly/repro.hpp"
#include "helly/symmetry.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace helly;
using helly::io::json;

namespace {

constexpr int kUsage = 2;
constexpr int kInvalid = 3;
constexpr int kViolation = 4;

std::ostringstream out;

void emit(const json &j)
{
    out << j.dump(2) << "\n";
}

void emit_graph(const Graph &g, bool dot)
{
    if (dot)
        out << io::to_dot(g);
    else
        emit(io::to_json(g));
}

Graph load_graph(const std::string &path)
{
    return io::graph_from_json(io::read_json_file(path));
}

json certificate(const TripleCertificate &c)
{
    return c.holds ? json(nullptr) : json(c.witness);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations with Helly graphs"};
    app.require_subcommand(1);
    bool dot = false;
    std::uint64_t seed = 0;

    std::string check_path;
    auto *check = app.add_subcommand("check", "Recognise Helly, clique-Helly, 1-Helly, weakly modular graphs");
    check->add_option("graph", check_path, "graph JSON")->required();

    std::string hull_path;
    auto *hull = app.add_subcommand("hull", "Discrete injective hull of a graph or integer metric");
    hull->add_option("input", hull_path, "graph or metric JSON")->required();
    hull->add_flag("--dot", dot, "emit the hull graph as DOT");

    std::string bic_path;
    std::vector<int> pair;
    bool fellow = false;
    auto *bic = app.add_subcommand("bicombing", "Normal clique-paths and fellow-traveler constants");
    bic->add_option("graph", bic_path, "graph JSON")->required();
    bic->add_option("--pair", pair, "vertices u v")->expected(2);
    bic->add_flag("--fellow-traveler", fellow, "compute fellow-traveler constants");
    bic->add_option("--seed", seed, "sampling seed");

    std::string build_kind;
    std::vector<std::string> build_inputs;
    int delta = 1;
    auto *build = app.add_subcommand("build", "Graph constructions");
    build->add_option("kind", build_kind, "product|thicken|rips|face|nerve|sgp|glue")
        ->required()
        ->check(CLI::IsMember({"product", "thicken", "rips", "face", "nerve", "sgp", "glue"}));
    build->add_option("inputs", build_inputs, "input JSON files")->required();
    build->add_option("--delta", delta, "Rips parameter");
    build->add_flag("--dot", dot, "emit DOT");

    std::string gen_name;
    std::vector<int> gen_params;
    bool gen_list = false;
    auto *gen_cmd = app.add_subcommand("gen", "Write a named generator graph");
    gen_cmd->add_option("name", gen_name, "generator name");
    gen_cmd->add_option("params", gen_params, "integer parameters");
    gen_cmd->add_flag("--list", gen_list, "list generator names");
    gen_cmd->add_flag("--dot", dot, "emit DOT");

    std::string hyp_path;
    auto *hyp = app.add_subcommand("hyp", "Gromov hyperbolicity by the four-point condition, reported as 2*delta");
    hyp->add_option("graph", hyp_path, "graph JSON")->required();
    hyp->add_option("--seed", seed, "sampling seed for large graphs");

    std::string coarse_path;
    std::vector<int> centers, radii;
    int max_balls = 4;
    auto *coarse = app.add_subcommand("coarse", "Coarse Helly defect of a ball family or of all small families");
    coarse->add_option("graph", coarse_path, "graph JSON")->required();
    coarse->add_option("--centers", centers, "ball centres");
    coarse->add_option("--radii", radii, "ball radii");
    coarse->add_option("--max-balls", max_balls, "family size bound for the exhaustive search");

    std::string fix_graph, fix_action;
    int hull_orbit = -1;
    auto *fix = app.add_subcommand("fix", "Invariant cliques under a finite group action");
    fix->add_option("graph", fix_graph, "graph JSON")->required();
    fix->add_option("action", fix_action, "action JSON")->required();
    fix->add_option("--hull-orbit", hull_orbit, "also search the hull of the orbit of this vertex");

    std::string hc_path;
    auto *hc = app.add_subcommand("hyper-check", "Helly and conformality tests of a hypergraph");
    hc->add_option("hypergraph", hc_path, "hypergraph JSON")->required();

    std::string repro_id;
    bool repro_list = false;
    auto *repro = app.add_subcommand("repro", "Run a named reproduction and print PASS or FAIL");
    repro->add_option("id", repro_id, "reproduction id");
    repro->add_flag("--list", repro_list, "list reproduction ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*check) {
            const Graph g = load_graph(check_path);
            json j = io::to_json(is_helly(g));
            j["is_median"] = is_median(g);
            emit(j);
        } else if (*hull) {
            const json in = io::read_json_file(hull_path);
            const FiniteMetric m =
                io::is_metric_json(in) ? io::metric_from_json(in) : metric_of(io::graph_from_json(in));
            const HullGraph hg = hellyfication(m);
            check_hull_invariants(m, hg);
            if (dot) {
                out << io::to_dot(hg.graph());
            } else {
                json j = io::to_json(hg);
                j["distance_profile"] = hull_distance_profile(hg);
                emit(j);
            }
        } else if (*bic) {
            const Graph g = load_graph(bic_path);
            if (pair.empty() && !fellow)
                throw ValidationError("bicombing needs --pair u v or --fellow-traveler");
            json j;
            if (!pair.empty()) {
                if (pair[0] < 0 || pair[1] < 0 || pair[0] >= g.n() || pair[1] >= g.n())
                    throw ValidationError("--pair vertex out of range");
                j["gamma"] = io::to_json(normal_clique_path(g, {pair[0]}, {pair[1]}));
                j["normal_path_positions"] = normal_path_positions(g, pair[0], pair[1]);
            }
            if (fellow)
                j["fellow_traveler"] = io::to_json(fellow_traveler_check(g, seed));
            emit(j);
        } else if (*build) {
            auto need = [&](std::size_t k) {
                if (build_inputs.size() != k)
                    throw ValidationError("build " + build_kind + " takes " + std::to_string(k) + " input file(s)");
            };
            if (build_kind == "product") {
                std::vector<Graph> gs;
                for (const auto &p : build_inputs)
                    gs.push_back(load_graph(p));
                emit_graph(strong_product(gs), dot);
            } else if (build_kind == "thicken") {
                need(1);
                emit_graph(thicken_median(load_graph(build_inputs[0])), dot);
            } else if (build_kind == "rips") {
                need(1);
                emit_graph(rips_power(load_graph(build_inputs[0]), delta), dot);
            } else if (build_kind == "face") {
                need(1);
                const FaceGraph fg = face_graph(load_graph(build_inputs[0]));
                if (dot) {
                    std::vector<std::string> labels;
                    for (const auto &f : fg.faces)
                        labels.push_back(to_string(f));
                    out << io::to_dot(fg.graph, labels);
                } else {
                    json j = io::to_json(fg.graph);
                    j["faces"] = fg.faces;
                    emit(j);
                }
            } else if (build_kind == "nerve") {
                need(1);
                const CliqueNerve cn = nerve_graph_of_cliques(load_graph(build_inputs[0]));
                if (dot) {
                    out << io::to_dot(cn.graph);
                } else {
                    json j = io::to_json(cn.graph);
                    j["cliques"] = cn.cliques;
                    emit(j);
                }
            } else if (build_kind == "sgp") {
                need(1);
                const SgpDescription d = io::sgp_from_json(io::read_json_file(build_inputs[0]));
                const SgpGraph sg = sgp_build(d);
                const ThreePieceReport rep = sgp_three_piece_report(d);
                if (dot) {
                    out << io::to_dot(sg.graph);
                } else {
                    json j = io::to_json(sg.graph);
                    j["tuples"] = sg.tuples;
                    j["three_piece"] = rep.holds;
                    j["three_piece_witness"] = rep.holds ? json(nullptr) : json(rep.witness);
                    j["uncovered_clique"] = rep.uncovered_clique ? json(*rep.uncovered_clique) : json(nullptr);
                    j["is_clique_helly"] = is_clique_helly(sg.graph);
                    emit(j);
                }
            } else {
                need(1);
                const json in = io::read_json_file(build_inputs[0]);
                const GlueResult r = glue_at_vertices(io::parts_from_json(in), io::gluings_from_json(in));
                if (dot) {
                    out << io::to_dot(r.graph);
                } else {
                    json j = io::to_json(r.graph);
                    j["map"] = r.map;
                    emit(j);
                }
            }
        } else if (*gen_cmd) {
            if (gen_list) {
                for (const auto &n : generator_names())
                    out << n << "\n";
            } else {
                if (gen_name.empty())
                    throw ValidationError("gen needs a generator name");
                emit_graph(generate(gen_name, gen_params), dot);
            }
        } else if (*hyp) {
            const HyperbolicityResult r = hyperbolicity(load_graph(hyp_path), 200, seed);
            emit({{"two_delta", r.two_delta},
                  {"witness", r.witness},
                  {"exhaustive", r.exhaustive},
                  {"note", "two_delta is twice the four-point hyperbolicity constant"}});
        } else if (*coarse) {
            const Graph g = load_graph(coarse_path);
            if (!centers.empty() || !radii.empty()) {
                VertexSet c(centers.begin(), centers.end());
                emit({{"defect", coarse_helly_defect(g, c, radii)}, {"centers", centers}, {"radii", radii}});
            } else {
                const BallFamilyDefect b = max_coarse_helly_defect(g, max_balls);
                emit({{"max_defect", b.defect}, {"centers", b.centers}, {"radii", b.radii}, {"max_balls", max_balls}});
            }
        } else if (*fix) {
            const Graph g = load_graph(fix_graph);
            const GroupAction a = io::action_from_json(io::read_json_file(fix_action));
            json j;
            j["group_order"] = close_group(g, a).size();
            j["fixed_clique"] = fixed_clique(g, a);
            const FixedFaceResult ff = fixed_face_subgraph(g, a);
            j["fixed_faces"] = ff.faces;
            j["fixed_face_subgraph_helly"] = ff.graph ? json(is_helly_graph(*ff.graph)) : json(nullptr);
            if (hull_orbit >= 0) {
                const HullOrbitResult h = hull_orbit_fixed_clique(g, a, hull_orbit);
                j["hull_orbit"] = {{"orbit", h.orbit},
                                   {"hull_vertices", h.hull.forms.size()},
                                   {"clique", h.clique},
                                   {"forms", h.forms}};
            }
            emit(j);
        } else if (*hc) {
            const Hypergraph h = io::hypergraph_from_json(io::read_json_file(hc_path));
            TripleCertificate bd, gil;
            const bool helly = is_helly(h, &bd);
            const bool conf = is_conformal(h, &gil);
            json j;
            j["is_helly"] = helly;
            j["berge_duchet_witness"] = certificate(bd);
            j["is_conformal"] = conf;
            j["gilmore_witness"] = certificate(gil);
            j["dual_is_helly"] = is_helly(dual(h));
            j["dual_is_conformal"] = is_conformal(dual(h));
            j["is_triangle_free"] = is_triangle_free_hypergraph(h);
            emit(j);
        } else if (*repro) {
            if (repro_list) {
                for (const auto &id : repro_ids())
                    out << id << "\n";
            } else {
                if (repro_id.empty())
                    throw ValidationError("repro needs an id (see --list)");
                const ReproResult r = run_repro(repro_id);
                out << (r.pass ? "PASS " : "FAIL ") << repro_id << ": " << r.detail << "\n";
                std::cout << out.str();
                return r.pass ? 0 : kViolation;
            }
        }
    } catch (const InvariantViolation &e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kViolation;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    std::cout << out.str();
    return 0;
}
