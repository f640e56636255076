// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/constructions.hpp"

#include "helly/cliques.hpp"
#include "helly/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace helly {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::size_t checked_product(const std::vector<std::size_t> &sizes)
{
    const std::size_t cap = limits::max_vertices();
    std::size_t total = 1;
    for (std::size_t s : sizes) {
        if (s == 0)
            return 0;
        if (total > cap / s)
            throw ResourceError("product exceeds HELLY_MAX_VERTICES = " + std::to_string(cap));
        total *= s;
    }
    if (total > cap)
        throw ResourceError("product exceeds HELLY_MAX_VERTICES = " + std::to_string(cap));
    return total;
}

// Closed neighbourhood as a sorted list including v.
std::vector<int> closed_list(const Graph &g, int v)
{
    std::vector<int> out = g.neighbors(v);
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

bool strongly_adjacent(const std::vector<Graph> &factors, const std::vector<int> &a, const std::vector<int> &b)
{
    bool differ = false;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (a[j] == b[j])
            continue;
        if (!factors[j].adjacent(a[j], b[j]))
            return false;
        differ = true;
    }
    return differ;
}

bool is_cube_clique(const Graph &g, const VertexSet &k)
{
    const int u = k.front();
    int v = u;
    for (int x : k)
        if (g.dist(u, x) > g.dist(u, v))
            v = x;
    return interval(g, u, v) == k && spans_cube(g, u, v);
}

struct SgpUnion {
    std::vector<std::vector<int>> tuples;
    std::vector<VertexSet> piece_vertices;
    EdgeList edges;
};

void enumerate_piece(const SgpDescription &desc, const Piece &p, std::size_t j, std::vector<int> &cur,
                     std::vector<std::vector<int>> &out)
{
    if (j == desc.factors.size()) {
        out.push_back(cur);
        return;
    }
    if (p[j]) {
        cur[j] = *p[j];
        enumerate_piece(desc, p, j + 1, cur, out);
        return;
    }
    for (int x = 0; x < desc.factors[j].n(); ++x) {
        cur[j] = x;
        enumerate_piece(desc, p, j + 1, cur, out);
    }
}

SgpUnion sgp_union(const SgpDescription &desc)
{
    desc.validate();
    const std::size_t cap = limits::max_vertices();
    std::vector<std::vector<std::vector<int>>> per_piece;
    std::set<std::vector<int>> all;
    for (const Piece &p : desc.pieces) {
        std::vector<std::size_t> sizes;
        for (std::size_t j = 0; j < p.size(); ++j)
            sizes.push_back(p[j] ? 1 : static_cast<std::size_t>(desc.factors[j].n()));
        checked_product(sizes);
        std::vector<std::vector<int>> vs;
        std::vector<int> cur(desc.factors.size(), 0);
        enumerate_piece(desc, p, 0, cur, vs);
        all.insert(vs.begin(), vs.end());
        if (all.size() > cap)
            throw ResourceError("SGP exceeds HELLY_MAX_VERTICES = " + std::to_string(cap));
        per_piece.push_back(std::move(vs));
    }
    SgpUnion u;
    u.tuples.assign(all.begin(), all.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < u.tuples.size(); ++i)
        index.emplace(u.tuples[i], static_cast<int>(i));
    std::set<Edge> edges;
    for (const auto &vs : per_piece) {
        VertexSet ids;
        for (const auto &t : vs)
            ids.push_back(index.at(t));
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (strongly_adjacent(desc.factors, vs[a], vs[b]))
                    edges.insert(std::minmax(ids[a], ids[b]));
        u.piece_vertices.push_back(normalized(std::move(ids)));
    }
    u.edges.n = static_cast<int>(u.tuples.size());
    u.edges.edges.assign(edges.begin(), edges.end());
    return u;
}

std::vector<VertexSet> uncovered_cliques(const SgpUnion &u)
{
    std::vector<VertexSet> out;
    for (const VertexSet &k : maximal_cliques(adjacency_bits(u.edges))) {
        bool inside = false;
        for (const VertexSet &pv : u.piece_vertices)
            if (is_subset(k, pv)) {
                inside = true;
                break;
            }
        if (!inside)
            out.push_back(k);
    }
    return out;
}

} // namespace

Graph strong_product(const std::vector<Graph> &gs)
{
    if (gs.empty())
        throw ValidationError("strong product of an empty factor list");
    std::vector<std::size_t> sizes;
    for (const Graph &g : gs)
        sizes.push_back(static_cast<std::size_t>(g.n()));
    const int n = static_cast<int>(checked_product(sizes));
    std::vector<std::vector<int>> closed;
    std::vector<int> offset(gs.size() + 1, 0);
    for (std::size_t j = 0; j < gs.size(); ++j) {
        offset[j + 1] = offset[j] + gs[j].n();
        for (int v = 0; v < gs[j].n(); ++v)
            closed.push_back(closed_list(gs[j], v));
    }
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        const std::vector<int> c = product_coordinates(gs, v);
        // Odometer over the closed neighbourhoods of the coordinates.
        std::vector<std::size_t> pos(gs.size(), 0);
        for (;;) {
            int w = 0;
            for (std::size_t j = 0; j < gs.size(); ++j)
                w = w * gs[j].n() + closed[offset[j] + c[j]][pos[j]];
            if (w > v)
                edges.emplace_back(v, w);
            std::size_t j = gs.size();
            while (j > 0) {
                --j;
                if (++pos[j] < closed[offset[j] + c[j]].size())
                    break;
                pos[j] = 0;
                if (j == 0)
                    goto done;
            }
        }
    done:;
    }
    return Graph(n, edges);
}

std::vector<int> product_coordinates(const std::vector<Graph> &gs, int v)
{
    std::vector<int> c(gs.size());
    for (std::size_t j = gs.size(); j-- > 0;) {
        c[j] = v % gs[j].n();
        v /= gs[j].n();
    }
    return c;
}

bool spans_cube(const Graph &g, int u, int v)
{
    const int k = g.dist(u, v);
    if (k >= 30)
        return false;
    const VertexSet iv = interval(g, u, v);
    if (iv.size() != (std::size_t{1} << k))
        return false;
    const Bits b = to_bits(iv, static_cast<std::size_t>(g.n()));
    std::size_t edges = 0;
    for (int x : iv) {
        int deg = 0;
        for (int y : g.neighbors(x))
            if (b[y])
                ++deg;
        if (deg != k)
            return false;
        edges += static_cast<std::size_t>(deg);
    }
    return edges / 2 == static_cast<std::size_t>(k) * (std::size_t{1} << k) / 2;
}

Graph thicken_median(const Graph &g)
{
    if (!is_median(g))
        throw ValidationError("thicken_median: input graph is not median");
    std::vector<Edge> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (spans_cube(g, u, v))
                edges.emplace_back(u, v);
    Graph t(g.n(), edges);
    for (const VertexSet &k : maximal_cliques(t))
        if (!is_cube_clique(g, k))
            throw InvariantViolation("thicken_median: maximal clique " + to_string(k) + " is not a cube");
    return t;
}

Graph rips_power(const Graph &g, int delta)
{
    if (delta < 1)
        throw ValidationError("rips_power: delta must be at least 1");
    std::vector<Edge> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.dist(u, v) <= delta)
                edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

FaceGraph face_graph(const Graph &g)
{
    FaceGraph out;
    out.faces = all_cliques(adjacency_bits(g));
    const std::size_t nf = out.faces.size();
    const std::size_t cap = limits::max_vertices();
    if (nf > cap)
        throw ResourceError("face graph exceeds HELLY_MAX_VERTICES = " + std::to_string(cap));
    std::vector<Bits> face_bits, common;
    for (const VertexSet &f : out.faces) {
        face_bits.push_back(to_bits(f, static_cast<std::size_t>(g.n())));
        Bits c = g.closed_nbhd(f.front());
        for (int x : f)
            c &= g.closed_nbhd(x);
        common.push_back(std::move(c));
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < nf; ++a)
        for (std::size_t b = a + 1; b < nf; ++b)
            if (face_bits[b].is_subset_of(common[a]))
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    out.graph = Graph(static_cast<int>(nf), edges);
    return out;
}

CliqueNerve nerve_graph_of_cliques(const Graph &g)
{
    CliqueNerve out;
    out.cliques = maximal_cliques(g);
    std::vector<Bits> bits;
    for (const VertexSet &k : out.cliques)
        bits.push_back(to_bits(k, static_cast<std::size_t>(g.n())));
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < bits.size(); ++a)
        for (std::size_t b = a + 1; b < bits.size(); ++b)
            if (bits[a].intersects(bits[b]))
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    out.graph = Graph(static_cast<int>(bits.size()), edges);
    return out;
}

void SgpDescription::validate() const
{
    if (factors.empty())
        throw ValidationError("SGP without factors");
    if (pieces.empty())
        throw ValidationError("SGP without pieces");
    std::set<Piece> seen;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece &p = pieces[i];
        if (p.size() != factors.size())
            throw ValidationError("SGP piece " + std::to_string(i) + " has " + std::to_string(p.size()) +
                                  " coordinates, expected " + std::to_string(factors.size()));
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p[j] && (*p[j] < 0 || *p[j] >= factors[j].n()))
                throw ValidationError("SGP piece " + std::to_string(i) + " fixes factor " + std::to_string(j) +
                                      " at invalid vertex " + std::to_string(*p[j]));
        if (!seen.insert(p).second)
            throw ValidationError("SGP piece " + std::to_string(i) + " repeats an earlier piece");
    }
}

bool pieces_agree(const SgpDescription &desc, int i, int j)
{
    const Piece &a = desc.pieces[i];
    const Piece &b = desc.pieces[j];
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && b[k] && *a[k] != *b[k])
            return false;
    return true;
}

SgpGraph sgp_build(const SgpDescription &desc)
{
    SgpUnion u = sgp_union(desc);
    const int np = static_cast<int>(desc.pieces.size());
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            const bool direct = !set_intersection(u.piece_vertices[i], u.piece_vertices[j]).empty();
            if (direct != pieces_agree(desc, i, j))
                throw InvariantViolation("SGP pieces " + std::to_string(i) + " and " + std::to_string(j) +
                                         ": agreement disagrees with vertex intersection");
        }
    if (!is_connected(u.edges))
        throw ValidationError("SGP union of pieces is disconnected");
    SgpGraph out;
    out.graph = Graph(u.edges);
    out.tuples = std::move(u.tuples);
    out.piece_vertices = std::move(u.piece_vertices);
    return out;
}

ThreePieceReport sgp_three_piece_report(const SgpDescription &desc)
{
    desc.validate();
    ThreePieceReport rep;
    const int np = static_cast<int>(desc.pieces.size());
    const std::size_t nf = desc.factors.size();
    for (int a = 0; a < np && rep.holds; ++a)
        for (int b = a + 1; b < np && rep.holds; ++b) {
            if (!pieces_agree(desc, a, b))
                continue;
            for (int c = b + 1; c < np && rep.holds; ++c) {
                if (!pieces_agree(desc, a, c) || !pieces_agree(desc, b, c))
                    continue;
                std::vector<char> need(nf, 0);
                for (std::size_t j = 0; j < nf; ++j) {
                    const int full = !desc.pieces[a][j] + !desc.pieces[b][j] + !desc.pieces[c][j];
                    need[j] = full >= 2;
                }
                bool found = false;
                for (int d = 0; d < np && !found; ++d) {
                    if (!pieces_agree(desc, d, a) || !pieces_agree(desc, d, b) || !pieces_agree(desc, d, c))
                        continue;
                    bool ok = true;
                    for (std::size_t j = 0; j < nf && ok; ++j)
                        if (need[j] && desc.pieces[d][j])
                            ok = false;
                    found = ok;
                }
                if (!found) {
                    rep.holds = false;
                    rep.witness = {a, b, c};
                }
            }
        }
    const std::vector<VertexSet> outside = uncovered_cliques(sgp_union(desc));
    if (!outside.empty())
        rep.uncovered_clique = outside.front();
    if (rep.holds && rep.uncovered_clique)
        throw InvariantViolation("3-piece SGP has clique " + to_string(*rep.uncovered_clique) + " outside every piece");
    return rep;
}

bool sgp_three_piece(const SgpDescription &desc)
{
    return sgp_three_piece_report(desc).holds;
}

std::vector<VertexSet> cliques_outside_pieces(const SgpDescription &desc, const SgpGraph &sg)
{
    SgpUnion u;
    u.edges.n = sg.graph.n();
    u.edges.edges = sg.graph.edges();
    u.piece_vertices = sg.piece_vertices;
    (void)desc;
    return uncovered_cliques(u);
}

void GspDescription::validate() const
{
    const int n = nerve.n();
    const int nf = static_cast<int>(factors.size());
    if (static_cast<int>(labels.size()) != n)
        throw ValidationError("A1: expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
    for (int v = 0; v < n; ++v) {
        const VertexSet &l = labels[v];
        for (std::size_t i = 0; i < l.size(); ++i)
            if (l[i] < 0 || l[i] >= nf || (i > 0 && l[i] <= l[i - 1]))
                throw ValidationError("A1: label of " + std::to_string(v) + " is not a sorted set of factor ids");
    }
    for (const Edge &e : nerve.edges())
        if (labels[e.first] == labels[e.second])
            throw ValidationError("A2: adjacent vertices " + std::to_string(e.first) + " and " +
                                  std::to_string(e.second) + " carry equal labels");
    if (static_cast<int>(realization.size()) != n)
        throw ValidationError("A3: realization size differs from nerve size");
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(realization[v].size()) != nf)
            throw ValidationError("A3: realization of " + std::to_string(v) + " has wrong arity");
        for (int j = 0; j < nf; ++j) {
            const bool labelled = std::binary_search(labels[v].begin(), labels[v].end(), j);
            const int p = realization[v][j];
            if (labelled ? p != -1 : (p < 0 || p >= factors[j].n()))
                throw ValidationError("A3: p_" + std::to_string(v) + " is invalid on factor " + std::to_string(j));
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool agree = true;
            for (int j = 0; j < nf && agree; ++j)
                if (realization[u][j] != -1 && realization[v][j] != -1 && realization[u][j] != realization[v][j])
                    agree = false;
            if (agree != nerve.adjacent(u, v))
                throw ValidationError("A4: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                      (agree ? " agree but are not adjacent" : " are adjacent but disagree"));
        }
}

SgpDescription gsp_realization(const GspDescription &desc)
{
    desc.validate();
    SgpDescription out;
    out.factors = desc.factors;
    for (int v = 0; v < desc.nerve.n(); ++v) {
        Piece p;
        for (int x : desc.realization[v])
            p.push_back(x == -1 ? std::nullopt : std::optional<int>(x));
        out.pieces.push_back(std::move(p));
    }
    try {
        out.validate();
    } catch (const ValidationError &e) {
        throw InvariantViolation(std::string("realization of a valid GSP: ") + e.what());
    }
    return out;
}

GspDescription gsp_of_sgp(const SgpDescription &desc)
{
    desc.validate();
    GspDescription out;
    out.factors = desc.factors;
    const int np = static_cast<int>(desc.pieces.size());
    std::vector<Edge> edges;
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j)
            if (pieces_agree(desc, i, j))
                edges.emplace_back(i, j);
    out.nerve = Graph(np, edges);
    for (const Piece &p : desc.pieces) {
        VertexSet l;
        std::vector<int> r;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (!p[j])
                l.push_back(static_cast<int>(j));
            r.push_back(p[j] ? *p[j] : -1);
        }
        out.labels.push_back(std::move(l));
        out.realization.push_back(std::move(r));
    }
    return out;
}

bool gsp_product_gilmore(const GspDescription &desc, std::array<int, 3> *witness)
{
    desc.validate();
    const Graph &g = desc.nerve;
    bool holds = true;
    for (int a = 0; a < g.n() && holds; ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a || !holds)
                continue;
            for (int c : g.neighbors(b)) {
                if (c <= b || !g.adjacent(a, c))
                    continue;
                const VertexSet &la = desc.labels[a], &lb = desc.labels[b], &lc = desc.labels[c];
                const VertexSet need =
                    set_union(set_union(set_intersection(la, lb), set_intersection(lb, lc)), set_intersection(la, lc));
                Bits around = g.closed_nbhd(a) & g.closed_nbhd(b) & g.closed_nbhd(c);
                bool found = false;
                for (auto y = around.find_first(); y != Bits::npos && !found; y = around.find_next(y))
                    found = is_subset(need, desc.labels[y]);
                if (!found) {
                    holds = false;
                    if (witness)
                        *witness = {a, b, c};
                    break;
                }
            }
        }
    if (holds != sgp_three_piece(gsp_realization(desc)))
        throw InvariantViolation("product-Gilmore condition and 3-piece condition of the realization disagree");
    return holds;
}

MedianSgp median_graph_sgp(const Graph &g)
{
    if (!is_median(g))
        throw ValidationError("median_graph_sgp: input graph is not median");
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto [a, b] = edges[i];
            const auto [x, y] = edges[j];
            if (g.dist(a, x) + g.dist(b, y) != g.dist(a, y) + g.dist(b, x))
                uf.unite(i, j);
        }
    std::vector<int> reps;
    for (int i = 0; i < m; ++i)
        if (uf.find(i) == i)
            reps.push_back(i);
    const int nc = static_cast<int>(reps.size());
    std::vector<std::vector<int>> coord(g.n(), std::vector<int>(nc));
    for (int v = 0; v < g.n(); ++v)
        for (int c = 0; c < nc; ++c) {
            const auto [a, b] = edges[reps[c]];
            coord[v][c] = g.dist(v, a) < g.dist(v, b) ? 0 : 1;
        }
    MedianSgp out;
    if (nc == 0) {
        // Single vertex: one trivial factor.
        out.desc.factors.push_back(Graph(1, {}));
        out.desc.pieces.push_back(Piece{0});
        out.to_sgp = {0};
        return out;
    }
    out.desc.factors.assign(static_cast<std::size_t>(nc), Graph(2, {{0, 1}}));
    for (const VertexSet &k : maximal_cliques(thicken_median(g))) {
        Piece p(static_cast<std::size_t>(nc));
        for (int c = 0; c < nc; ++c) {
            bool varies = false;
            for (int x : k)
                varies = varies || coord[x][c] != coord[k.front()][c];
            if (!varies)
                p[c] = coord[k.front()][c];
        }
        out.desc.pieces.push_back(std::move(p));
    }
    const SgpGraph sg = sgp_build(out.desc);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < sg.tuples.size(); ++i)
        index.emplace(sg.tuples[i], static_cast<int>(i));
    if (sg.tuples.size() != static_cast<std::size_t>(g.n()))
        throw InvariantViolation("median SGP has " + std::to_string(sg.tuples.size()) + " vertices, expected " +
                                 std::to_string(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        auto it = index.find(coord[v]);
        if (it == index.end())
            throw InvariantViolation("median SGP misses a vertex of the input graph");
        out.to_sgp.push_back(it->second);
    }
    return out;
}

GlueResult glue_at_vertices(const std::vector<Graph> &parts, const std::vector<Gluing> &gluings)
{
    const int np = static_cast<int>(parts.size());
    if (np == 0)
        throw ValidationError("glue_at_vertices: no parts");
    if (static_cast<int>(gluings.size()) != np - 1)
        throw ValidationError("glue_at_vertices: " + std::to_string(gluings.size()) + " gluings for " +
                              std::to_string(np) + " parts do not form a tree");
    std::vector<int> offset(static_cast<std::size_t>(np) + 1, 0);
    for (int i = 0; i < np; ++i)
        offset[i + 1] = offset[i] + parts[i].n();
    UnionFind pattern(np), verts(offset[np]);
    for (std::size_t k = 0; k < gluings.size(); ++k) {
        const Gluing &gl = gluings[k];
        for (auto [p, v] : {std::pair{gl.part_a, gl.vertex_a}, std::pair{gl.part_b, gl.vertex_b}})
            if (p < 0 || p >= np || v < 0 || v >= parts[p].n())
                throw ValidationError("glue_at_vertices: gluing " + std::to_string(k) + " names an invalid vertex");
        if (!pattern.unite(gl.part_a, gl.part_b))
            throw ValidationError("glue_at_vertices: gluing " + std::to_string(k) + " closes a cycle in the pattern");
        verts.unite(offset[gl.part_a] + gl.vertex_a, offset[gl.part_b] + gl.vertex_b);
    }
    std::vector<int> id(static_cast<std::size_t>(offset[np]), -1);
    int next = 0;
    for (int x = 0; x < offset[np]; ++x) {
        const int r = verts.find(x);
        if (id[r] == -1)
            id[r] = next++;
        id[x] = id[r];
    }
    GlueResult out;
    std::set<Edge> edges;
    for (int i = 0; i < np; ++i) {
        std::vector<int> map;
        for (int v = 0; v < parts[i].n(); ++v)
            map.push_back(id[offset[i] + v]);
        for (const Edge &e : parts[i].edges())
            edges.insert(std::minmax(map[e.first], map[e.second]));
        out.map.push_back(std::move(map));
    }
    out.graph = Graph(next, std::vector<Edge>(edges.begin(), edges.end()));
    return out;
}

} // namespace helly
