// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/constructions.hpp"
#include "helly/geometry.hpp"
#include "helly/recognition.hpp"
#include "helly/symmetry.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

using namespace helly;

namespace {

// Automorphisms by backtracking over vertex images, in lexicographic order.
std::vector<Permutation> automorphisms(const Graph &g, std::size_t limit)
{
    std::vector<Permutation> out;
    Permutation p(g.n(), -1);
    std::vector<bool> used(g.n(), false);
    auto rec = [&](auto &&self, int v) -> void {
        if (out.size() >= limit)
            return;
        if (v == g.n()) {
            out.push_back(p);
            return;
        }
        for (int w = 0; w < g.n(); ++w) {
            if (used[w] || g.degree(w) != g.degree(v))
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == g.adjacent(p[u], w);
            if (!ok)
                continue;
            p[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            p[v] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

// Group closure by breadth-first search over words in the generators.
std::set<Permutation> closure_oracle(int n, const std::vector<Permutation> &gens)
{
    std::set<Permutation> seen;
    Permutation id(n);
    for (int i = 0; i < n; ++i)
        id[i] = i;
    std::vector<Permutation> queue{id};
    seen.insert(id);
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (const Permutation &s : gens) {
            Permutation q(n);
            for (int i = 0; i < n; ++i)
                q[i] = s[queue[h][i]];
            if (seen.insert(q).second)
                queue.push_back(q);
        }
    return seen;
}

// Smallest invariant clique by scanning all vertex subsets.
std::optional<VertexSet> invariant_clique_oracle(const Graph &g, const std::set<Permutation> &group)
{
    std::optional<VertexSet> best;
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
        VertexSet s;
        for (int v = 0; v < g.n(); ++v)
            if (mask >> v & 1u)
                s.push_back(v);
        if (!is_clique(g, s))
            continue;
        bool inv = true;
        for (const Permutation &p : group) {
            VertexSet img;
            for (int v : s)
                img.push_back(p[v]);
            std::sort(img.begin(), img.end());
            inv = inv && img == s;
        }
        if (inv && (!best || s.size() < best->size() || (s.size() == best->size() && s < *best)))
            best = s;
    }
    return best;
}

Permutation rotation(int n, int k)
{
    Permutation p(n);
    for (int i = 0; i < n; ++i)
        p[i] = (i + k) % n;
    return p;
}

struct Case {
    std::string name;
    Graph graph;
    GroupAction action;
};

// Graphs of the corpus with up to 12 vertices, each with a few automorphism subgroups.
std::vector<Case> action_cases(bool helly_only)
{
    std::vector<Case> out;
    for (const NamedGraph &ng : corpus()) {
        if (ng.graph.n() > 12 || (helly_only && !is_helly_graph(ng.graph)))
            continue;
        const auto autos = automorphisms(ng.graph, 64);
        out.push_back({ng.name, ng.graph, {{autos.front()}}});
        if (autos.size() > 1) {
            out.push_back({ng.name, ng.graph, {{autos[1]}}});
            out.push_back({ng.name, ng.graph, {{autos.back()}}});
            out.push_back({ng.name, ng.graph, {{autos[1], autos.back()}}});
        }
    }
    return out;
}

} // namespace

TEST_CASE("permutation helpers")
{
    const Permutation r = rotation(6, 1);
    CHECK(compose(r, inverse(r)) == identity_permutation(6));
    CHECK(compose(r, r) == rotation(6, 2));
    const Permutation s{1, 2, 0, 3};
    const Permutation t{0, 1, 3, 2};
    CHECK(compose(s, t) == Permutation{1, 2, 3, 0});
}

TEST_CASE("group closure")
{
    const Graph c6 = gen::cycle(6);
    CHECK(close_group(c6, {{rotation(6, 1)}}).size() == 6);
    CHECK(close_group(c6, {{identity_permutation(6)}}).size() == 1);
    CHECK(close_group(c6, {{}}).size() == 1);
    const Graph k4 = gen::complete(4);
    const std::vector<Permutation> refl{{1, 0, 2, 3}, {0, 2, 1, 3}};
    const auto grp = close_group(k4, {refl});
    CHECK(grp.size() == 6);
    const auto want = closure_oracle(4, refl);
    CHECK(std::vector<Permutation>(want.begin(), want.end()) == grp);
    CHECK(grp.front() == identity_permutation(4));
    CHECK(orbits(k4, {refl}) == std::vector<VertexSet>{{0, 1, 2}, {3}});
    CHECK(orbits(c6, {{rotation(6, 2)}}) == std::vector<VertexSet>{{0, 2, 4}, {1, 3, 5}});

    for (const NamedGraph &ng : corpus()) {
        if (ng.graph.n() > 10)
            continue;
        const auto autos = automorphisms(ng.graph, 6);
        const auto got = close_group(ng.graph, {autos});
        const auto ref = closure_oracle(ng.graph.n(), autos);
        CHECK(std::vector<Permutation>(ref.begin(), ref.end()) == got);
    }
}

TEST_CASE("action validation")
{
    const Graph p4 = gen::path(4);
    try {
        GroupAction{{{1, 0, 2, 3}}}.validate(p4);
        FAIL("expected a ValidationError");
    } catch (const ValidationError &e) {
        CHECK(std::string(e.what()).find("edge (1,2)") != std::string::npos);
    }
    const GroupAction repeat{{{0, 0, 1, 2}}};
    const GroupAction shorter{{{0, 1, 2}}};
    const GroupAction flip{{{3, 2, 1, 0}}};
    CHECK_THROWS_AS(repeat.validate(p4), ValidationError);
    CHECK_THROWS_AS(shorter.validate(p4), ValidationError);
    CHECK_NOTHROW(flip.validate(p4));

    setenv("HELLY_MAX_GROUP", "3", 1);
    const GroupAction rot{{rotation(6, 1)}};
    CHECK_THROWS_AS(close_group(gen::cycle(6), rot), ResourceError);
    unsetenv("HELLY_MAX_GROUP");
}

TEST_CASE("fixed cliques")
{
    const Graph star = gen::star(4);
    CHECK(fixed_clique(star, {{{0, 2, 3, 4, 1}}}) == VertexSet{0});
    CHECK(fixed_clique(gen::complete(3), {{rotation(3, 1)}}) == VertexSet{0, 1, 2});
    const Graph k3 = gen::king(3, 3);
    const Permutation quarter{6, 3, 0, 7, 4, 1, 8, 5, 2};
    CHECK(fixed_clique(k3, {{quarter}}) == VertexSet{4});
    const VertexSet swap = fixed_clique(gen::path(4), {{{3, 2, 1, 0}}});
    CHECK(swap == VertexSet{1, 2});
    const GroupAction rot{{rotation(6, 1)}};
    CHECK_THROWS_AS(fixed_clique(gen::cycle(6), rot), DomainError);
    CHECK_FALSE(find_invariant_clique(gen::cycle(6), rot).has_value());
    CHECK(find_invariant_clique(gen::cycle(6), {{{0, 5, 4, 3, 2, 1}}}) == VertexSet{0});
    CHECK(find_invariant_clique(gen::cycle(6), {{{1, 0, 5, 4, 3, 2}}}) == VertexSet{0, 1});
}

TEST_CASE("fixed cliques agree with a subset scan")
{
    int helly_cases = 0;
    for (const Case &c : action_cases(false)) {
        INFO(c.name);
        const auto group = closure_oracle(c.graph.n(), c.action.perms);
        const auto want = invariant_clique_oracle(c.graph, group);
        CHECK(find_invariant_clique(c.graph, c.action) == want);
        if (is_helly_graph(c.graph)) {
            ++helly_cases;
            REQUIRE(want.has_value());
            CHECK(fixed_clique(c.graph, c.action) == *want);
        }
    }
    CHECK(helly_cases >= 20);
}

TEST_CASE("hull orbit fixed cliques")
{
    const HullOrbitResult c6 = hull_orbit_fixed_clique(gen::cycle(6), {{rotation(6, 1)}}, 0);
    CHECK(c6.orbit == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK(c6.hull.forms.size() == 14);
    CHECK(c6.clique == VertexSet{4, 9});
    const auto grp = close_group(c6.hull.graph(), c6.hull_action);
    CHECK(is_invariant(c6.clique, grp));
    CHECK(is_clique(c6.hull.graph(), c6.clique));
    for (const MetricForm &f : c6.forms)
        CHECK(is_extremal(metric_of(gen::cycle(6)), f));

    const HullOrbitResult fixed = hull_orbit_fixed_clique(gen::star(3), {{{0, 2, 3, 1}}}, 0);
    CHECK(fixed.orbit == VertexSet{0});
    CHECK(fixed.hull.forms.size() == 1);
    CHECK(fixed.clique == VertexSet{0});

    // two endpoints at distance 2 swapped: the hull is a path and the midpoint is fixed
    const HullOrbitResult mid = hull_orbit_fixed_clique(gen::path(3), {{{2, 1, 0}}}, 0);
    CHECK(mid.orbit == VertexSet{0, 2});
    REQUIRE(mid.forms.size() == 1);
    CHECK(mid.forms[0] == MetricForm{1, 1});

    const GroupAction flip{{{2, 1, 0}}};
    CHECK_THROWS_AS(hull_orbit_fixed_clique(gen::path(3), flip, 3), ValidationError);

    for (const Case &c : action_cases(false)) {
        INFO(c.name);
        const HullOrbitResult r = hull_orbit_fixed_clique(c.graph, c.action, c.graph.n() - 1);
        CHECK(is_invariant(r.clique, close_group(r.hull.graph(), r.hull_action)));
        CHECK(is_clique(r.hull.graph(), r.clique));
    }
}

TEST_CASE("fixed face subgraphs")
{
    const Graph c5 = gen::cycle(5);
    const FixedFaceResult triv = fixed_face_subgraph(c5, {{identity_permutation(5)}});
    const FaceGraph fg = face_graph(c5);
    CHECK(triv.faces == fg.faces);
    REQUIRE(triv.graph.has_value());
    CHECK(*triv.graph == fg.graph);

    const FixedFaceResult k3 = fixed_face_subgraph(gen::complete(3), {{rotation(3, 1), {1, 0, 2}}});
    CHECK(k3.faces == std::vector<VertexSet>{{0, 1, 2}});
    REQUIRE(k3.graph.has_value());
    CHECK(k3.graph->n() == 1);

    const FixedFaceResult c6 = fixed_face_subgraph(gen::cycle(6), {{rotation(6, 1)}});
    CHECK(c6.faces.empty());
    CHECK_FALSE(c6.graph.has_value());

    const FixedFaceResult p4 = fixed_face_subgraph(gen::path(4), {{{3, 2, 1, 0}}});
    CHECK(p4.faces == std::vector<VertexSet>{{1, 2}});
    REQUIRE(p4.graph.has_value());
    CHECK(is_helly_graph(*p4.graph));

    int count = 0;
    for (const Case &c : action_cases(true)) {
        INFO(c.name);
        const FixedFaceResult r = fixed_face_subgraph(c.graph, c.action);
        REQUIRE(r.graph.has_value());
        CHECK(is_helly_graph(*r.graph));
        for (const VertexSet &f : r.faces)
            CHECK(is_invariant(f, close_group(c.graph, c.action)));
        ++count;
    }
    CHECK(count >= 20);
}

TEST_CASE("conjugate actions give conjugate fixed cliques")
{
    std::mt19937_64 rng(41);
    for (const Case &c : action_cases(true)) {
        const int n = c.graph.n();
        Permutation sigma = identity_permutation(n);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::vector<Edge> es;
        for (const Edge &e : c.graph.edges())
            es.emplace_back(sigma[e.first], sigma[e.second]);
        const Graph h(n, es);
        GroupAction conj;
        for (const Permutation &p : c.action.perms)
            conj.perms.push_back(compose(sigma, compose(p, inverse(sigma))));
        const VertexSet a = fixed_clique(c.graph, c.action);
        const VertexSet b = fixed_clique(h, conj);
        CHECK(a.size() == b.size());
        VertexSet img;
        for (int v : a)
            img.push_back(sigma[v]);
        std::sort(img.begin(), img.end());
        CHECK(is_invariant(img, close_group(h, conj)));
        CHECK(fixed_face_subgraph(c.graph, c.action).faces.size() == fixed_face_subgraph(h, conj).faces.size());
    }
}

TEST_CASE("direct and hull routes agree on Helly graphs")
{
    // on a Helly graph the orbit hull embeds in the graph, so an invariant clique exists either way
    for (const Case &c : action_cases(true)) {
        INFO(c.name);
        const VertexSet direct = fixed_clique(c.graph, c.action);
        CHECK(is_invariant(direct, close_group(c.graph, c.action)));
        for (int v = 0; v < c.graph.n(); v += 3) {
            const HullOrbitResult r = hull_orbit_fixed_clique(c.graph, c.action, v);
            CHECK(!r.clique.empty());
            if (r.orbit.size() == 1)
                CHECK(r.clique.size() == 1);
        }
    }
}
