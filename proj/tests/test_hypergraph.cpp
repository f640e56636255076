// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/geometry.hpp"
#include "helly/hypergraph.hpp"
#include "helly/recognition.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace helly;

namespace {

Hypergraph make(int n, std::vector<VertexSet> edges)
{
    Hypergraph h{n, std::move(edges)};
    h.validate_and_normalize();
    return h;
}

Hypergraph random_hypergraph(std::mt19937_64 &rng, int max_n = 10, int max_m = 10)
{
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    const int m = std::uniform_int_distribution<int>(1, max_m)(rng);
    Hypergraph h;
    h.n = n;
    for (int i = 0; i < m; ++i) {
        VertexSet e;
        const int size = std::uniform_int_distribution<int>(1, std::min(n, 4))(rng);
        while (static_cast<int>(e.size()) < size) {
            const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (std::find(e.begin(), e.end(), v) == e.end())
                e.push_back(v);
        }
        h.edges.push_back(e);
    }
    h.validate_and_normalize();
    return h;
}

// Conformality from the definition: every maximal clique of the 2-section lies in an edge.
bool conformal_by_subsets(const Hypergraph &h)
{
    oracle::Matrix a(h.n, std::vector<int>(h.n, 0));
    for (const VertexSet &e : h.edges)
        for (int x : e)
            for (int y : e)
                if (x != y)
                    a[x][y] = 1;
    for (const oracle::Set &c : oracle::maximal_cliques(a)) {
        if (c.size() == 1 && std::none_of(h.edges.begin(), h.edges.end(), [&](const VertexSet &e) {
                return std::find(e.begin(), e.end(), c[0]) != e.end();
            }))
            continue; // uncovered vertex
        bool inside = false;
        for (const VertexSet &e : h.edges)
            inside = inside || std::includes(e.begin(), e.end(), c.begin(), c.end());
        if (!inside)
            return false;
    }
    return true;
}

// Simplification done by hand: inclusion-maximal edges, one copy each.
std::set<VertexSet> maximal_edges(const Hypergraph &h)
{
    std::set<VertexSet> out;
    for (const VertexSet &e : h.edges) {
        bool dominated = false;
        for (const VertexSet &f : h.edges)
            if (f != e && std::includes(f.begin(), f.end(), e.begin(), e.end()))
                dominated = true;
        if (!dominated)
            out.insert(e);
    }
    return out;
}

bool graph_equal_edges(const EdgeList &el, const std::vector<Edge> &edges)
{
    auto a = el.edges;
    std::sort(a.begin(), a.end());
    return a == edges;
}

} // namespace

TEST_CASE("constructor validation")
{
    Hypergraph bad{3, {{0, 5}}};
    CHECK_THROWS_AS(bad.validate_and_normalize(), ValidationError);
    Hypergraph empty{3, {{}}};
    CHECK_THROWS_AS(empty.validate_and_normalize(), ValidationError);
    CHECK(make(3, {{2, 0}}).edges[0] == VertexSet{0, 2});
}

TEST_CASE("dual")
{
    const Hypergraph d = dual(make(2, {{0, 1}}));
    CHECK(d.n == 1);
    CHECK(d.edges == std::vector<VertexSet>{{0}, {0}});
    CHECK(simplify(d).edges == std::vector<VertexSet>{{0}});
    CHECK(uncovered_vertices(make(4, {{0, 1}})) == VertexSet{2, 3});

    const Hypergraph x = clique_hypergraph(gen::cycle(4));
    const Hypergraph dx = dual(x);
    CHECK(dx.edges == std::vector<VertexSet>{{0, 1}, {0, 2}, {2, 3}, {1, 3}});
    CHECK(dual(dx) == x);
}

TEST_CASE("double dual restores every hypergraph without uncovered vertices")
{
    std::mt19937_64 rng(2);
    int tested = 0;
    for (int t = 0; t < 300; ++t) {
        const Hypergraph h = random_hypergraph(rng);
        if (!uncovered_vertices(h).empty())
            continue;
        ++tested;
        CHECK(dual(dual(h)) == h);
    }
    CHECK(tested > 50);
}

TEST_CASE("2-section, line graph, nerve graph")
{
    const Hypergraph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(two_section(c4) == gen::cycle(4));
    CHECK(nerve_graph(c4) == Graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    CHECK(two_section(make(3, {{0, 1, 2}})) == gen::complete(3));
    CHECK_THROWS_AS(two_section(make(4, {{0, 1}, {2, 3}})), ValidationError);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const Hypergraph h = random_hypergraph(rng);
        CHECK(graph_equal_edges(nerve_edges(h), two_section_edges(dual(h)).edges));
        const EdgeList ne = nerve_edges(h);
        std::vector<Edge> want;
        for (int i = 0; i < static_cast<int>(h.edges.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(h.edges.size()); ++j)
                if (oracle::intersects(h.edges[i], h.edges[j]))
                    want.emplace_back(i, j);
        CHECK(graph_equal_edges(ne, want));
    }

    // ball hypergraph of P3 against pairwise intersection
    const Hypergraph b = ball_hypergraph(gen::path(3));
    std::vector<Edge> want;
    for (int i = 0; i < static_cast<int>(b.edges.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(b.edges.size()); ++j)
            if (oracle::intersects(b.edges[i], b.edges[j]))
                want.emplace_back(i, j);
    CHECK(nerve_graph(b).edges() == want);
    CHECK(line_graph(b) == nerve_graph(b));
}

TEST_CASE("Berge-Duchet")
{
    // 4-cycle of 2-edges: no three edges pairwise meet
    const Hypergraph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(is_helly(c4));
    CHECK(oracle::family_helly(c4.edges, 4));

    CHECK(has_helly_property(ball_hypergraph(gen::random_tree(9, 4))));
    CHECK(has_helly_property(ball_hypergraph(gen::binary_tree(2))));

    const Hypergraph sun = clique_hypergraph(gen::sun3());
    TripleCertificate cert;
    CHECK_FALSE(is_helly(sun, &cert));
    CHECK(oracle::family_helly(sun.edges, sun.n) == false);
    CHECK_FALSE(cert.holds);
    CHECK(cert.witness[0] >= 0);

    const Hypergraph tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(is_helly(tri));
    // adding the triangle itself makes the simplification a single edge
    CHECK(is_helly(make(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}})));
    CHECK_FALSE(has_helly_property(make(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}})));
}

TEST_CASE("Berge-Duchet agrees with the subfamily oracles")
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 400; ++t) {
        const Hypergraph h = random_hypergraph(rng, 9, 12);
        const bool raw = oracle::family_helly(h.edges, h.n);
        CHECK(has_helly_property(h) == raw);
        CHECK(helly_oracle(h) == raw);
        CHECK(helly_via_maximal_families(h) == raw);
        const std::set<VertexSet> mx = maximal_edges(h);
        CHECK(is_helly(h) == oracle::family_helly({mx.begin(), mx.end()}, h.n));
    }
}

TEST_CASE("Gilmore")
{
    for (const char *name : {"cycle5", "sun3", "king3x3", "petersen", "octahedron", "wheel5"}) {
        for (const NamedGraph &ng : corpus())
            if (ng.name == name)
                CHECK(is_conformal(clique_hypergraph(ng.graph)));
    }
    TripleCertificate cert;
    CHECK_FALSE(is_conformal(make(3, {{0, 1}, {1, 2}, {0, 2}}), &cert));
    CHECK(cert.witness == std::array<int, 3>{0, 1, 2});

    std::mt19937_64 rng(6);
    for (int t = 0; t < 400; ++t) {
        const Hypergraph h = random_hypergraph(rng);
        const bool want = conformal_by_subsets(h);
        CHECK(is_conformal(h) == want);
        CHECK(conformal_oracle(h) == want);
        if (has_helly_property(h) && uncovered_vertices(h).empty())
            CHECK(is_conformal(dual(h)));
    }
}

TEST_CASE("duality between conformality and Hellyness")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const Hypergraph h = random_hypergraph(rng);
        const Hypergraph d = dual(h);
        CHECK(is_conformal(h) == has_helly_property(d));
        CHECK(is_conformal(h) == oracle::family_helly(d.edges, d.n));
    }
}

TEST_CASE("triangle-free hypergraphs")
{
    CHECK(is_triangle_free_hypergraph(make(6, {{0, 1}, {2, 3, 4}, {5}})));
    CHECK_FALSE(is_triangle_free_hypergraph(make(3, {{0, 1}, {1, 2}, {0, 2}})));
    // the 3-cycle through the three 2-edges has no member containing {0,1,2}
    CHECK_FALSE(is_triangle_free_hypergraph(make(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}})));
    CHECK(is_triangle_free_hypergraph(make(4, {{0, 1, 2}, {2, 3}})));

    std::mt19937_64 rng(8);
    int found = 0;
    for (int t = 0; t < 2000 && found < 80; ++t) {
        const Hypergraph h = random_hypergraph(rng, 8, 6);
        if (!is_triangle_free_hypergraph(h))
            continue;
        ++found;
        CHECK(is_conformal(h));
        CHECK(is_helly(h));
        CHECK(is_triangle_free_hypergraph(dual(h)));
        const EdgeList two = two_section_edges(h);
        if (uncovered_vertices(h).empty() && is_connected(two))
            CHECK(is_clique_helly(Graph(two)));
    }
    CHECK(found >= 40);
}

TEST_CASE("clique-Helly 2-sections of conformal hypergraphs")
{
    std::mt19937_64 rng(9);
    int tested = 0;
    for (int t = 0; t < 600; ++t) {
        const Hypergraph h = random_hypergraph(rng, 8, 8);
        const EdgeList two = two_section_edges(h);
        if (!uncovered_vertices(h).empty() || !is_connected(two))
            continue;
        ++tested;
        const Graph g(two);
        CHECK((is_clique_helly(g) && is_conformal(h)) == (is_helly(h) && is_conformal(h)));
    }
    CHECK(tested > 30);
}

TEST_CASE("conformal closure")
{
    const Hypergraph c = conformal_closure(make(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(c.edges.back() == VertexSet{0, 1, 2});
    CHECK(c.edges.size() == 4);
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; ++t) {
        const Hypergraph h = random_hypergraph(rng);
        const Hypergraph cl = conformal_closure(h);
        CHECK(is_conformal(cl));
        CHECK(two_section_edges(cl).edges == two_section_edges(h).edges);
        CHECK(conformal_closure(cl) == cl);
    }
}

TEST_CASE("hypergraph Hellyfication")
{
    const Hypergraph h = make(3, {{0, 1}, {1, 2}, {0, 2}});
    const Hypergraph hh = hellyfication_hypergraph(h);
    CHECK(hh.n == 4);
    CHECK(hh.edges == std::vector<VertexSet>{{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
    const Hypergraph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(hellyfication_hypergraph(c4) == c4);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        const Hypergraph g = random_hypergraph(rng, 8, 8);
        const Hypergraph f = hellyfication_hypergraph(g);
        CHECK(has_helly_property(f));
        CHECK(oracle::family_helly(f.edges, f.n));
        REQUIRE(f.edges.size() == g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            VertexSet trace;
            for (int v : f.edges[i])
                if (v < g.n)
                    trace.push_back(v);
            CHECK(trace == g.edges[i]);
            for (std::size_t j = 0; j < g.edges.size(); ++j)
                CHECK(oracle::intersects(f.edges[i], f.edges[j]) == oracle::intersects(g.edges[i], g.edges[j]));
        }
        CHECK(hellyfication_hypergraph(f) == f);
        if (has_helly_property(g))
            CHECK(f == g);
    }
}

TEST_CASE("cell complexes")
{
    const CellConditions s = check_cell_conditions(simplex_complex(3));
    CHECK(s.three_cell);
    CHECK(s.gmc);
    // the edges of a triangle face meet pairwise without a common vertex
    CHECK_FALSE(s.helly3);
    CHECK(s.helly3_witness.size() == 3);
    CHECK(is_conformal(cell_hypergraph(simplex_complex(3))));
    const CellConditions q = check_cell_conditions(cube_complex(3));
    CHECK(q.three_cell);
    CHECK(q.gmc);
    CHECK(q.helly3);
    CHECK(is_conformal(cell_hypergraph(cube_complex(3))));

    const CellComplex hollow{{{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}}};
    const CellConditions hc = check_cell_conditions(hollow);
    CHECK_FALSE(hc.three_cell);
    CHECK(!hc.three_cell_witness.empty());

    CHECK_THROWS_AS(check_cell_conditions(CellComplex{{{0, 1}, {1, 2}}}), ValidationError);

    const std::vector<int> dims = cell_dimensions(simplex_complex(2));
    const CellComplex sx = simplex_complex(2);
    for (std::size_t i = 0; i < sx.cells.size(); ++i)
        CHECK(dims[i] == static_cast<int>(sx.cells[i].size()) - 1);
    const CellComplex cx = cube_complex(2);
    const std::vector<int> cd = cell_dimensions(cx);
    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
        const int size = static_cast<int>(cx.cells[i].size());
        CHECK(cd[i] == (size == 0 ? -1 : size == 1 ? 0 : size == 2 ? 1 : 2));
    }
}
