// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/geometry.hpp"
#include "helly/hull.hpp"
#include "helly/recognition.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

using namespace helly;

namespace {

// Extremal forms from the definitions: every integer vector in the box f(x) <= ecc(x) that is a
// metric form and tight at every coordinate.
std::vector<MetricForm> forms_oracle(const FiniteMetric &m)
{
    std::vector<int> ecc(m.n, 0);
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            ecc[x] = std::max(ecc[x], m.d[x][y]);
    std::vector<MetricForm> out;
    MetricForm f(m.n, 0);
    while (true) {
        bool form = true;
        for (int x = 0; x < m.n && form; ++x)
            for (int y = 0; y < m.n && form; ++y)
                form = f[x] + f[y] >= m.d[x][y];
        bool tight = form;
        for (int x = 0; x < m.n && tight; ++x) {
            bool t = false;
            for (int y = 0; y < m.n; ++y)
                t = t || f[x] + f[y] == m.d[x][y];
            tight = t;
        }
        if (tight)
            out.push_back(f);
        int i = 0;
        while (i < m.n && f[i] == ecc[i])
            f[i++] = 0;
        if (i == m.n)
            break;
        ++f[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

int sup(const MetricForm &a, const MetricForm &b)
{
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = std::max(s, std::abs(a[i] - b[i]));
    return s;
}

FiniteMetric random_metric(std::mt19937_64 &rng, int n)
{
    // shortest-path closure of random positive weights
    FiniteMetric m;
    m.n = n;
    m.d.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m.d[i][j] = m.d[j][i] = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.d[i][j] = std::min(m.d[i][j], m.d[i][k] + m.d[k][j]);
    return m;
}

int defect_oracle(const Graph &g, const VertexSet &c, const std::vector<int> &r)
{
    int best = 1 << 20;
    for (int y = 0; y < g.n(); ++y) {
        int worst = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            worst = std::max(worst, g.dist(y, c[i]) - r[i]);
        best = std::min(best, worst);
    }
    return best;
}

} // namespace

TEST_CASE("metric validation")
{
    FiniteMetric asym{2, {{0, 1}, {2, 0}}};
    CHECK_THROWS_AS(asym.validate(), ValidationError);
    FiniteMetric tri{3, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}};
    CHECK_THROWS_AS(tri.validate(), ValidationError);
    FiniteMetric zero{2, {{0, 0}, {0, 0}}};
    CHECK_THROWS_AS(zero.validate(), ValidationError);
    CHECK_NOTHROW(metric_of(gen::cycle(5)).validate());
}

TEST_CASE("extremal forms")
{
    const FiniteMetric c6 = metric_of(gen::cycle(6));
    for (int x = 0; x < 6; ++x)
        CHECK(is_extremal(c6, kuratowski(c6, x)));
    CHECK_FALSE(is_extremal(c6, MetricForm(6, 3)));
    CHECK(is_extremal(c6, {1, 2, 1, 2, 1, 2}));
    CHECK_THROWS_AS(is_extremal(c6, MetricForm(6, 0)), ValidationError);
    CHECK(is_pointwise_minimal(c6, {1, 2, 1, 2, 1, 2}));
}

TEST_CASE("extremalize")
{
    const FiniteMetric m = metric_of(gen::petersen());
    const MetricForm e = kuratowski(m, 3);
    CHECK(extremalize(m, e) == e);
    const MetricForm top(10, 2);
    const MetricForm g = extremalize(m, top);
    CHECK(is_extremal(m, g));
    for (int i = 0; i < 10; ++i)
        CHECK(g[i] <= 2);
    MetricForm up = e;
    for (int &v : up)
        ++v;
    const MetricForm h = extremalize(m, up);
    CHECK(is_extremal(m, h));
    for (int i = 0; i < 10; ++i)
        CHECK(h[i] <= up[i]);
}

TEST_CASE("hull of a Helly graph is the graph")
{
    for (const NamedGraph &ng : corpus()) {
        if (ng.graph.n() > 30 || !is_helly_graph(ng.graph))
            continue;
        INFO(ng.name);
        const HullGraph hg = hellyfication(ng.graph);
        REQUIRE(static_cast<int>(hg.forms.size()) == ng.graph.n());
        std::vector<int> seen = hg.embed;
        std::sort(seen.begin(), seen.end());
        CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
        const Graph h = hg.graph();
        CHECK(h.edge_count() == ng.graph.edge_count());
        for (const Edge &e : ng.graph.edges())
            CHECK(h.adjacent(hg.embed[e.first], hg.embed[e.second]));
    }
}

TEST_CASE("hull of C4")
{
    const HullGraph hg = hellyfication(gen::cycle(4));
    CHECK(hg.forms == forms_oracle(metric_of(gen::cycle(4))));
    REQUIRE(hg.forms.size() == 5);
    const Graph h = hg.graph();
    CHECK(h.edge_count() == 8);
    int hub = -1;
    for (int v = 0; v < 5; ++v)
        if (h.degree(v) == 4)
            hub = v;
    REQUIRE(hub >= 0);
    CHECK(hg.forms[hub] == MetricForm{1, 1, 1, 1});
    CHECK(is_helly_graph(h));
}

TEST_CASE("hull of C6")
{
    const FiniteMetric m = metric_of(gen::cycle(6));
    const HullGraph hg = hellyfication(m);
    CHECK(hg.forms == forms_oracle(m));
    CHECK(hg.forms.size() == 14);
    CHECK(is_helly_graph(hg.graph()));
    CHECK(is_isometric_embedding(gen::cycle(6), hg.graph(), hg.embed));
    CHECK(hull_distance_profile(hg) == 1);
    CHECK(dress_distance_identity_check(m, hg));
}

TEST_CASE("hull search equals the box enumeration")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        const FiniteMetric m = random_metric(rng, 2 + t % 4);
        const HullGraph hg = hellyfication(m);
        const auto want = forms_oracle(m);
        CHECK(hg.forms == want);
        CHECK(extremal_forms_bruteforce(m) == want);
        for (const Edge &e : hg.edges)
            CHECK(sup(hg.forms[e.first], hg.forms[e.second]) == 1);
        CHECK_NOTHROW(check_hull_invariants(m, hg));
        CHECK(is_helly_graph(hg.graph()));
    }
    for (const NamedGraph &ng : corpus())
        if (ng.graph.n() <= 7) {
            const FiniteMetric m = metric_of(ng.graph);
            CHECK(hellyfication(m).forms == forms_oracle(m));
        }
}

TEST_CASE("stored forms satisfy the structural invariants")
{
    for (const NamedGraph &ng : corpus()) {
        if (ng.graph.n() > 10)
            continue;
        INFO(ng.name);
        const FiniteMetric m = metric_of(ng.graph);
        const HullGraph hg = hellyfication(m);
        for (const MetricForm &f : hg.forms) {
            CHECK(is_extremal(m, f));
            for (int x = 0; x < m.n; ++x) {
                CHECK(f[x] == sup(f, hg.forms[hg.embed[x]]));
                CHECK(f[x] <= ng.graph.eccentricity(x));
                for (int y = 0; y < m.n; ++y)
                    CHECK(f[x] + m.d[x][y] >= f[y]);
            }
        }
        for (int x = 0; x < m.n; ++x)
            for (int y = 0; y < m.n; ++y)
                CHECK(sup(hg.forms[hg.embed[x]], hg.forms[hg.embed[y]]) == m.d[x][y]);
        CHECK(hull_is_idempotent(hg));
        CHECK(dress_distance_identity_check(m, hg));
        if (m.n <= 5)
            CHECK(hull_is_minimal(m, hg));
    }
}

TEST_CASE("minimality on small metrics")
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 30; ++t) {
        const FiniteMetric m = random_metric(rng, 2 + t % 4);
        CHECK(hull_is_minimal(m, hellyfication(m)));
    }
}

TEST_CASE("distance profile")
{
    for (const NamedGraph &ng : corpus())
        if (ng.graph.n() <= 60 && is_helly_graph(ng.graph))
            CHECK(hull_distance_profile(hellyfication(ng.graph)) <= 1);
    CHECK(hull_distance_profile(hellyfication(gen::path(2))) == 0);
    FiniteMetric one{1, {{0}}};
    const HullGraph p = hellyfication(one);
    CHECK(p.forms.size() == 1);
    CHECK(dress_distance_identity_check(one, p));
    FiniteMetric two{2, {{0, 2}, {2, 0}}};
    CHECK(hellyfication(two).forms == std::vector<MetricForm>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("Dress identity on tree metrics")
{
    const Graph t = gen::random_tree(10, 5);
    const FiniteMetric m = metric_of(t, {0, 3, 5, 7, 9});
    CHECK(dress_distance_identity_check(m, hellyfication(m)));
}

TEST_CASE("form cap")
{
    setenv("HELLY_MAX_FORMS", "6", 1);
    CHECK_THROWS_AS(hellyfication(gen::cycle(6)), ResourceError);
    unsetenv("HELLY_MAX_FORMS");
}

TEST_CASE("coarse Helly defect")
{
    const Graph c6 = gen::cycle(6);
    CHECK(coarse_helly_defect(c6, {0, 1}, {1, 1}) == 0);
    CHECK(coarse_helly_defect(c6, {0, 2, 4}, {1, 1, 1}) == defect_oracle(c6, {0, 2, 4}, {1, 1, 1}));
    CHECK(coarse_helly_defect(c6, {0, 2, 4}, {1, 1, 1}) == 1);
    CHECK_THROWS_AS(coarse_helly_defect(c6, {0, 3}, {1, 1}), ValidationError);
    CHECK(ball_excess(c6, {0, 3}, {1, 1}) == 1);
    CHECK(coarse_helly_defect(c6, {2}, {0}) == 0);
}

TEST_CASE("coarse Helly constants on hyperbolic and cube-free median graphs")
{
    for (const NamedGraph &ng : corpus()) {
        if (ng.graph.n() > 16)
            continue;
        INFO(ng.name);
        const int two_delta = hyperbolicity(ng.graph).two_delta;
        const BallFamilyDefect b = max_coarse_helly_defect(ng.graph, 4);
        CHECK(b.defect <= two_delta);
        if (!b.centers.empty())
            CHECK(coarse_helly_defect(ng.graph, b.centers, b.radii) == b.defect);
    }
    for (const Graph &g : {gen::grid(3, 3), gen::grid(3, 4), gen::random_tree(14, 6), gen::binary_tree(3)}) {
        CHECK(is_median(g));
        CHECK(max_coarse_helly_defect(g, 4).defect <= 1);
    }
}
