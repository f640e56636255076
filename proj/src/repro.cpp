// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/repro.hpp"

#include "helly/bicombing.hpp"
#include "helly/constructions.hpp"
#include "helly/geometry.hpp"
#include "helly/hull.hpp"
#include "helly/recognition.hpp"
#include "helly/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace helly {

namespace {

std::string yes(bool b)
{
    return b ? "true" : "false";
}

ReproResult classification()
{
    const HellyReport c4 = is_helly(gen::cycle(4));
    const HellyReport c7 = is_helly(gen::cycle(7));
    const HellyReport sun = is_helly(gen::sun3());
    bool ok = c4.is_clique_helly && !c4.is_one_helly && c7.is_one_helly && !c7.is_helly && sun.is_weakly_modular &&
              !sun.is_helly;
    for (int n = 1; n <= 6; ++n)
        ok = ok && is_helly(gen::complete(n)).is_helly;
    ok = ok && is_helly(gen::binary_tree(3)).is_helly && is_helly(gen::random_tree(15, 3)).is_helly;
    for (int k = 2; k <= 5; ++k)
        ok = ok && is_helly(gen::king(k, k)).is_helly;
    return {ok, "C4 clique-Helly=" + yes(c4.is_clique_helly) + " 1-Helly=" + yes(c4.is_one_helly) +
                    "; C7 1-Helly=" + yes(c7.is_one_helly) + " Helly=" + yes(c7.is_helly) +
                    "; sun3 weakly-modular=" + yes(sun.is_weakly_modular) + " Helly=" + yes(sun.is_helly)};
}

ReproResult zcube_defect()
{
    const DefectResult r = z3_counterexample(1);
    return {r.defect == 4, "defect " + std::to_string(r.defect) + " at n=1 (radius 2n); defect " +
                               std::to_string(r.intersecting_defect) + " at intersecting radius " +
                               std::to_string(r.intersecting_radius)};
}

ReproResult zcube_growth()
{
    const DefectResult a = z3_counterexample(1), b = z3_counterexample(2);
    return {a.defect == 4 && b.defect == 8 && b.intersecting_defect > a.intersecting_defect,
            "defects " + std::to_string(a.defect) + ", " + std::to_string(b.defect) + " at n=1,2"};
}

ReproResult t3_defect()
{
    const DefectResult a = t3_counterexample(1), b = t3_counterexample(2);
    return {a.defect >= 1 && b.defect >= 2,
            "defects " + std::to_string(a.defect) + ", " + std::to_string(b.defect) + " at n=1,2"};
}

ReproResult fellow_traveler_king5()
{
    const FellowTravelerResult r = fellow_traveler_check(gen::king(5, 5));
    return {r.clique_constant <= 1 && r.path_constant <= 3,
            "clique constant " + std::to_string(r.clique_constant) + " (bound 1), path constant " +
                std::to_string(r.path_constant) + " (bound 3), " + std::to_string(r.tuples) + " tuples"};
}

ReproResult normal_path_figure()
{
    const Graph g = gen::normal_path_figure();
    const CliquePath p = normal_clique_path(g, {0}, {6});
    const CliquePath want{{0}, {1, 2}, {3, 4, 5}, {6}};
    bool y_free = true;
    for (const VertexSet &pos : normal_path_positions(g, 0, 6))
        for (int v : pos)
            y_free = y_free && v != 2;
    std::string shown;
    const auto names = gen::normal_path_figure_names();
    for (const VertexSet &c : p) {
        shown += shown.empty() ? "(" : ", ";
        if (c.size() > 1)
            shown += "{";
        for (std::size_t i = 0; i < c.size(); ++i)
            shown += (i ? "," : "") + names[c[i]];
        if (c.size() > 1)
            shown += "}";
    }
    shown += ")";
    return {is_helly_graph(g) && p == want && y_free, "gamma_ts = " + shown + "; y on a normal path: " + yes(!y_free)};
}

ReproResult hull_c4()
{
    const HullGraph hg = hellyfication(gen::cycle(4));
    const Graph h = hg.graph();
    int hub = -1;
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) == 4)
            hub = v;
    return {h.n() == 5 && hub >= 0 && is_helly_graph(h),
            "hull of C4 has " + std::to_string(h.n()) + " vertices and " + std::to_string(h.edge_count()) + " edges"};
}

ReproResult grid_correspondence()
{
    const bool a = l1_linf_grid_correspondence(1), b = l1_linf_grid_correspondence(2);
    return {a && b, "k=1 " + yes(a) + ", k=2 " + yes(b)};
}

ReproResult thickening()
{
    const bool q3 = thicken_median(gen::hypercube(3)) == gen::complete(8);
    const bool sq = thicken_median(gen::grid(3, 3)) == gen::king(3, 3);
    const bool h = is_helly_graph(thicken_median(gen::grid(4, 5)));
    return {q3 && sq && h,
            "Q3 -> K8 " + yes(q3) + ", 3x3 grid -> king " + yes(sq) + ", 4x5 thickening Helly " + yes(h)};
}

ReproResult sun3_amalgam()
{
    // Triangle {a,b,c} and the fan over x,a,b,y with apex c, identified along the edge ab.
    const Graph sun = gen::sun3();
    const bool parts_helly = is_helly_graph(gen::complete(3)) && is_helly_graph(gen::fan(3));
    bool rejected = false;
    try {
        glue_at_vertices({gen::complete(3), gen::fan(3)}, {{0, 0, 1, 2}, {0, 1, 1, 3}});
    } catch (const ValidationError &) {
        rejected = true;
    }
    const bool wedge = is_helly_graph(glue_at_vertices({gen::complete(3), gen::fan(3)}, {{0, 0, 1, 0}}).graph);
    return {parts_helly && !is_helly_graph(sun) && rejected && wedge,
            "parts Helly " + yes(parts_helly) + ", 3-sun Helly " + yes(is_helly_graph(sun)) +
                ", edge gluing rejected " + yes(rejected) + ", vertex wedge Helly " + yes(wedge)};
}

ReproResult fixed_clique_king3()
{
    Permutation p(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            p[i * 3 + j] = j * 3 + (2 - i);
    const VertexSet k = fixed_clique(gen::king(3, 3), GroupAction{{p}});
    return {k == VertexSet{4}, "fixed clique " + to_string(k)};
}

ReproResult stable_intervals()
{
    int worst = 0;
    int graphs = 0;
    for (const NamedGraph &ng : corpus())
        if (weak_modularity(ng.graph).weakly_modular()) {
            worst = std::max(worst, stable_interval_constant(ng.graph));
            ++graphs;
        }
    return {worst <= 1, "max constant " + std::to_string(worst) + " over " + std::to_string(graphs) + " graphs"};
}

const std::map<std::string, std::function<ReproResult()>> &table()
{
    static const std::map<std::string, std::function<ReproResult()>> t = {
        {"classification", classification},
        {"fellow-traveler-king5", fellow_traveler_king5},
        {"fixed-clique-king3", fixed_clique_king3},
        {"grid-correspondence", grid_correspondence},
        {"hull-c4", hull_c4},
        {"normal-path-figure", normal_path_figure},
        {"stable-intervals", stable_intervals},
        {"sun3-amalgam", sun3_amalgam},
        {"t3-defect", t3_defect},
        {"thickening", thickening},
        {"zcube-defect", zcube_defect},
        {"zcube-growth", zcube_growth},
    };
    return t;
}

} // namespace

std::vector<std::string> repro_ids()
{
    std::vector<std::string> out;
    for (const auto &[k, v] : table())
        out.push_back(k);
    return out;
}

ReproResult run_repro(const std::string &id)
{
    auto it = table().find(id);
    if (it == table().end())
        throw ValidationError("unknown reproduction '" + id + "'");
    return it->second();
}

} // namespace helly
