// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace helly::io {

namespace {

int get_int(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw ValidationError(std::string("expected integer field '") + key + "'");
    return j.at(key).get<int>();
}

const json &get_array(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw ValidationError(std::string("expected array field '") + key + "'");
    return j.at(key);
}

std::vector<int> int_list(const json &j, const char *what)
{
    if (!j.is_array())
        throw ValidationError(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const json &x : j) {
        if (!x.is_number_integer())
            throw ValidationError(std::string(what) + ": expected integers");
        out.push_back(x.get<int>());
    }
    return out;
}

json triple_json(const std::optional<std::array<int, 3>> &w)
{
    if (!w)
        return nullptr;
    return json(*w);
}

} // namespace

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw ValidationError("'" + path + "': " + e.what());
    }
}

json to_json(const Graph &g)
{
    json edges = json::array();
    for (const Edge &e : g.edges())
        edges.push_back({e.first, e.second});
    return {{"n", g.n()}, {"edges", edges}};
}

EdgeList edge_list_from_json(const json &j)
{
    EdgeList el;
    el.n = get_int(j, "n");
    for (const json &e : get_array(j, "edges")) {
        const std::vector<int> uv = int_list(e, "edge");
        if (uv.size() != 2)
            throw ValidationError("edge must have two endpoints");
        el.edges.emplace_back(std::min(uv[0], uv[1]), std::max(uv[0], uv[1]));
    }
    std::sort(el.edges.begin(), el.edges.end());
    return el;
}

Graph graph_from_json(const json &j)
{
    return Graph(edge_list_from_json(j));
}

json to_json(const Hypergraph &h)
{
    return {{"n", h.n}, {"edges", h.edges}};
}

Hypergraph hypergraph_from_json(const json &j)
{
    Hypergraph h;
    h.n = get_int(j, "n");
    for (const json &e : get_array(j, "edges"))
        h.edges.push_back(int_list(e, "hyperedge"));
    h.validate_and_normalize();
    return h;
}

bool is_metric_json(const json &j)
{
    return j.is_object() && j.contains("d");
}

FiniteMetric metric_from_json(const json &j)
{
    FiniteMetric m;
    m.n = get_int(j, "n");
    for (const json &row : get_array(j, "d"))
        m.d.push_back(int_list(row, "metric row"));
    m.validate();
    return m;
}

json to_json(const HullGraph &hg)
{
    json edges = json::array();
    for (const Edge &e : hg.edges)
        edges.push_back({e.first, e.second});
    return {{"n", hg.forms.size()}, {"forms", hg.forms}, {"edges", edges}, {"embed", hg.embed}};
}

json to_json(const HellyReport &r)
{
    json j;
    j["is_helly"] = r.is_helly;
    j["is_clique_helly"] = r.is_clique_helly;
    j["is_one_helly"] = r.is_one_helly;
    j["is_dismantlable"] = r.is_dismantlable;
    j["is_weakly_modular"] = r.is_weakly_modular;
    j["ball_route_checked"] = r.ball_route_checked;
    j["clique_helly_witness"] = triple_json(r.clique_helly_witness);
    j["one_helly_witness"] = triple_json(r.one_helly_witness);
    j["ball_witness"] = triple_json(r.ball_witness);
    json dis;
    dis["status"] = r.dismantling.status == DismantlingStatus::Dismantled ? "dismantled"
                    : r.dismantling.status == DismantlingStatus::Stuck    ? "stuck"
                                                                          : "greedy_stuck";
    dis["order"] = r.dismantling.order;
    dis["dominator"] = r.dismantling.dominator;
    dis["stuck"] = r.dismantling.stuck;
    j["dismantling"] = dis;
    j["triangle_condition"] = r.weak_modularity.tc_holds;
    j["quadrangle_condition"] = r.weak_modularity.qc_holds;
    j["tc_witness"] = r.weak_modularity.tc_witness;
    j["qc_witness"] = r.weak_modularity.qc_witness;
    return j;
}

json to_json(const CliquePath &p)
{
    return json(p);
}

json to_json(const FellowTravelerResult &r)
{
    return {{"clique_constant", r.clique_constant},
            {"path_constant", r.path_constant},
            {"clique_witness", r.clique_witness},
            {"path_witness", r.path_witness},
            {"tuples", r.tuples},
            {"exhaustive", r.exhaustive}};
}

GroupAction action_from_json(const json &j)
{
    GroupAction a;
    for (const json &p : get_array(j, "perms"))
        a.perms.push_back(int_list(p, "permutation"));
    return a;
}

SgpDescription sgp_from_json(const json &j)
{
    SgpDescription d;
    for (const json &f : get_array(j, "factors"))
        d.factors.push_back(graph_from_json(f));
    for (const json &p : get_array(j, "pieces")) {
        if (!p.is_array())
            throw ValidationError("piece must be an array");
        Piece piece;
        for (const json &x : p) {
            if (x.is_null())
                piece.push_back(std::nullopt);
            else if (x.is_number_integer())
                piece.push_back(x.get<int>());
            else
                throw ValidationError("piece coordinates must be null or a vertex id");
        }
        d.pieces.push_back(std::move(piece));
    }
    d.validate();
    return d;
}

std::vector<Graph> parts_from_json(const json &j)
{
    std::vector<Graph> out;
    for (const json &p : get_array(j, "parts"))
        out.push_back(graph_from_json(p));
    return out;
}

std::vector<Gluing> gluings_from_json(const json &j)
{
    std::vector<Gluing> out;
    for (const json &g : get_array(j, "gluings")) {
        const std::vector<int> v = int_list(g, "gluing");
        if (v.size() != 4)
            throw ValidationError("gluing must be [part_a, vertex_a, part_b, vertex_b]");
        out.push_back({v[0], v[1], v[2], v[3]});
    }
    return out;
}

std::string to_dot(const Graph &g, const std::vector<std::string> &labels)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) {
        os << "  " << v;
        if (v < static_cast<int>(labels.size()))
            os << " [label=\"" << labels[v] << "\"]";
        os << ";\n";
    }
    for (const Edge &e : g.edges())
        os << "  " << e.first << " -- " << e.second << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace helly::io
