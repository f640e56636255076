// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/bicombing.hpp"
#include "helly/constructions.hpp"
#include "helly/geometry.hpp"
#include "helly/recognition.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace helly;

namespace {

// f_tau(sigma) straight from the ball-intersection formulas.
VertexSet imprint_oracle(const Graph &g, const VertexSet &tau, const VertexSet &sigma)
{
    int k = 0;
    for (int t : tau)
        for (int s : sigma)
            k = std::max(k, g.dist(t, s));
    auto within = [&](const VertexSet &s, int x, int r) {
        return std::all_of(s.begin(), s.end(), [&](int y) { return g.dist(x, y) <= r; });
    };
    VertexSet rhat, out;
    for (int x = 0; x < g.n(); ++x)
        if (within(tau, x, k) && within(sigma, x, 1))
            rhat.push_back(x);
    for (int x = 0; x < g.n(); ++x)
        if (within(tau, x, k - 1) && within(rhat, x, 1))
            out.push_back(x);
    return out;
}

std::vector<NamedGraph> helly_corpus(int max_n)
{
    std::vector<NamedGraph> out;
    for (const NamedGraph &ng : corpus())
        if (ng.graph.n() <= max_n && is_helly_graph(ng.graph))
            out.push_back(ng);
    return out;
}

} // namespace

TEST_CASE("imprints")
{
    const Graph p5 = gen::path(5);
    CHECK(imprint(p5, {0}, {4}) == VertexSet{3});

    const Graph k3 = gen::king(3, 3);
    const VertexSet f = imprint(k3, {0}, {8});
    CHECK(f == imprint_oracle(k3, {0}, {8}));
    CHECK(!f.empty());
    CHECK(is_clique(k3, f));
    CHECK(uniform_distance(k3, {0}, f) == 1);
    CHECK(uniform_distance(k3, f, {8}) == 1);

    CHECK_THROWS_AS(imprint(p5, {0}, {1}), DomainError);
    CHECK_THROWS_AS(imprint(gen::cycle(4), {0}, {2}), PreconditionError);
}

TEST_CASE("imprints agree with the formula and are monotone")
{
    std::mt19937_64 rng(31);
    for (const NamedGraph &ng : helly_corpus(40)) {
        const Graph &g = ng.graph;
        const auto cliques = maximal_cliques(g);
        for (int t = 0; t < 60; ++t) {
            const VertexSet &tau = cliques[rng() % cliques.size()];
            const VertexSet &sigma = cliques[rng() % cliques.size()];
            const int k = set_distance_max(g, tau, sigma);
            if (k < 2)
                continue;
            const VertexSet f = imprint(g, tau, sigma);
            CHECK(f == imprint_oracle(g, tau, sigma));
            CHECK(is_clique(g, f));
            CHECK(set_distance_max(g, tau, f) == k - 1);
            if (uniform_distance(g, tau, sigma) == k)
                CHECK(uniform_distance(g, tau, f) == k - 1);
            for (int v : sigma) {
                const VertexSet sub{v};
                if (set_distance_max(g, tau, sub) == k) {
                    const VertexSet fs = imprint(g, tau, sub);
                    CHECK(std::includes(f.begin(), f.end(), fs.begin(), fs.end()));
                }
            }
        }
    }
}

TEST_CASE("normal clique-paths")
{
    const Graph k3 = gen::king(3, 3);
    CHECK(normal_clique_path(k3, {0}, {1}) == CliquePath{{0}, {1}});
    CHECK(normal_clique_path(gen::path(5), {0}, {4}) == CliquePath{{0}, {1}, {2}, {3}, {4}});
    const Graph fig = gen::normal_path_figure();
    CHECK(is_helly_graph(fig));
    CHECK(normal_clique_path(fig, {0}, {6}) == CliquePath{{0}, {1, 2}, {3, 4, 5}, {6}});
    CHECK(gen::normal_path_figure_names()[4] == "u'");
    CHECK_THROWS_AS(normal_clique_path(gen::path(3), {0}, {1, 2}), DomainError);
}

TEST_CASE("local verification")
{
    const Graph k4 = gen::king(4, 4);
    const CliquePath p = normal_clique_path(k4, {0}, {15});
    CHECK(verify_normal_clique_path(k4, p));
    CliquePath bad = p;
    bad[1].push_back(2);
    std::sort(bad[1].begin(), bad[1].end());
    CHECK_FALSE(verify_normal_clique_path(k4, bad));

    const CliquePath q = normal_clique_path(k4, {1}, {14});
    CliquePath r(q.rbegin(), q.rend());
    const bool ok = verify_normal_clique_path(k4, r);
    CHECK(ok == (r == normal_clique_path(k4, {14}, {1})));
}

TEST_CASE("clique-path length and geodesic selections")
{
    std::mt19937_64 rng(32);
    for (const NamedGraph &ng : helly_corpus(60)) {
        const Graph &g = ng.graph;
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v) {
                const CliquePath p = normal_clique_path(g, {u}, {v});
                CHECK(static_cast<int>(p.size()) == g.dist(u, v) + 1);
                CHECK(verify_normal_clique_path(g, p));
                std::vector<int> sel;
                for (const VertexSet &c : p)
                    sel.push_back(c[rng() % c.size()]);
                for (std::size_t i = 0; i < sel.size(); ++i)
                    CHECK(g.dist(sel.front(), sel[i]) == static_cast<int>(i));
                CHECK(g.dist(sel.front(), sel.back()) == g.dist(u, v));
            }
    }
}

TEST_CASE("normal paths")
{
    CHECK(normal_paths(gen::path(5), 0, 4) == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
    CHECK(normal_paths(gen::king(3, 3), 0, 1) == std::vector<std::vector<int>>{{0, 1}});
    const Graph fig = gen::normal_path_figure();
    const auto pos = normal_path_positions(fig, 0, 6);
    REQUIRE(pos.size() == 4);
    CHECK(pos[1] == VertexSet{1});
    for (const VertexSet &s : pos)
        CHECK(std::find(s.begin(), s.end(), 2) == s.end());
    CHECK(imprint(fig, {0}, {3}) == VertexSet{1});

    for (const NamedGraph &ng : helly_corpus(30)) {
        const Graph &g = ng.graph;
        for (int t = 0; t < g.n(); ++t)
            for (int s = 0; s < g.n(); ++s) {
                const CliquePath gamma = normal_clique_path(g, {t}, {s});
                const auto paths = normal_paths(g, t, s);
                CHECK(!paths.empty());
                for (const auto &p : paths) {
                    CHECK(is_normal_path(g, p));
                    REQUIRE(p.size() == gamma.size());
                    for (std::size_t i = 0; i < p.size(); ++i) {
                        CHECK(g.dist(t, p[i]) == static_cast<int>(i));
                        CHECK(std::binary_search(gamma[i].begin(), gamma[i].end(), p[i]));
                    }
                }
            }
    }
}

TEST_CASE("fellow traveler constants")
{
    const FellowTravelerResult tree = fellow_traveler_check(gen::random_tree(12, 9));
    CHECK(tree.clique_constant <= 1);
    CHECK(tree.path_constant <= 3);
    const FellowTravelerResult k5 = fellow_traveler_check(gen::king(5, 5));
    CHECK(k5.exhaustive);
    CHECK(k5.clique_constant <= 1);
    CHECK(k5.path_constant <= 3);
    const FellowTravelerResult q4 = fellow_traveler_check(thicken_median(gen::hypercube(4)));
    CHECK(q4.clique_constant <= 1);
    CHECK(q4.path_constant <= 3);
    CHECK_THROWS_AS(fellow_traveler_check(gen::cycle(5)), DomainError);

    const FellowTravelerResult sampled = fellow_traveler_check(gen::king(10, 10), 7, 60, 3000);
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.clique_constant <= 1);
    CHECK(sampled.path_constant <= 3);
    const FellowTravelerResult again = fellow_traveler_check(gen::king(10, 10), 7, 60, 3000);
    CHECK(again.tuples == sampled.tuples);
    CHECK(again.clique_witness == sampled.clique_witness);
}

TEST_CASE("2-local recognition")
{
    CHECK(local_recognition_radius_check(gen::path(5)));
    CHECK(local_recognition_radius_check(gen::king(4, 4)));
    CHECK(local_recognition_radius_check(thicken_median(gen::grid(2, 3))));
}

TEST_CASE("uniqueness against the local verifier")
{
    for (const NamedGraph &ng : helly_corpus(30)) {
        INFO(ng.name);
        const UniquenessReport r = clique_path_uniqueness_check(ng.graph);
        CHECK(r.holds);
        CHECK(r.counterexample.empty());
    }
}
