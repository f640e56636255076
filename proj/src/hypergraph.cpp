// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/hypergraph.hpp"

#include "helly/cliques.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace helly {

void Hypergraph::validate_and_normalize()
{
    if (n < 0)
        throw ValidationError("hypergraph vertex count must be nonnegative");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto &e = edges[i];
        e = normalized(e);
        if (e.empty())
            throw ValidationError("hypergraph edge " + std::to_string(i) + " is empty");
        if (e.front() < 0 || e.back() >= n)
            throw ValidationError("hypergraph edge " + std::to_string(i) + " has a vertex out of range");
    }
}

namespace {

std::vector<Bits> edge_bits(const Hypergraph &h)
{
    std::vector<Bits> out;
    out.reserve(h.edges.size());
    for (const auto &e : h.edges)
        out.push_back(to_bits(e, static_cast<std::size_t>(h.n)));
    return out;
}

// inc[v] = set of edge indices containing v
std::vector<Bits> incidence(const Hypergraph &h)
{
    std::vector<Bits> inc(static_cast<std::size_t>(h.n), Bits(h.edges.size()));
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (int v : h.edges[i])
            inc[v].set(i);
    return inc;
}

Graph connected_or_throw(const EdgeList &el, const char *what)
{
    if (!is_connected(el))
        throw ValidationError(std::string(what) + " is disconnected");
    return Graph(el);
}

} // namespace

VertexSet uncovered_vertices(const Hypergraph &h)
{
    std::vector<char> seen(static_cast<std::size_t>(h.n), 0);
    for (const auto &e : h.edges)
        for (int v : e)
            seen[v] = 1;
    VertexSet out;
    for (int v = 0; v < h.n; ++v)
        if (!seen[v])
            out.push_back(v);
    return out;
}

Hypergraph dual(const Hypergraph &h)
{
    Hypergraph d;
    d.n = static_cast<int>(h.edges.size());
    auto inc = incidence(h);
    for (int v = 0; v < h.n; ++v)
        if (inc[v].any())
            d.edges.push_back(from_bits(inc[v]));
    return d;
}

Hypergraph simplify(const Hypergraph &h)
{
    std::vector<VertexSet> es = h.edges;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    Hypergraph out;
    out.n = h.n;
    for (std::size_t i = 0; i < es.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < es.size() && maximal; ++j)
            if (i != j && es[j].size() > es[i].size() && is_subset(es[i], es[j]))
                maximal = false;
        if (maximal)
            out.edges.push_back(es[i]);
    }
    return out;
}

bool is_simple(const Hypergraph &h)
{
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (std::size_t j = 0; j < h.edges.size(); ++j)
            if (i != j && is_subset(h.edges[i], h.edges[j]))
                return false;
    return true;
}

EdgeList two_section_edges(const Hypergraph &h)
{
    std::set<Edge> es;
    for (const auto &e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                es.emplace(e[i], e[j]);
    return EdgeList{h.n, {es.begin(), es.end()}};
}

EdgeList nerve_edges(const Hypergraph &h)
{
    EdgeList el;
    el.n = static_cast<int>(h.edges.size());
    auto eb = edge_bits(h);
    for (int i = 0; i < el.n; ++i)
        for (int j = i + 1; j < el.n; ++j)
            if (eb[i].intersects(eb[j]))
                el.edges.emplace_back(i, j);
    return el;
}

Graph two_section(const Hypergraph &h)
{
    return connected_or_throw(two_section_edges(h), "2-section");
}

Graph line_graph(const Hypergraph &h)
{
    return connected_or_throw(two_section_edges(dual(h)), "line graph");
}

Graph nerve_graph(const Hypergraph &h)
{
    return connected_or_throw(nerve_edges(h), "nerve graph");
}

TripleCertificate berge_duchet(const Hypergraph &h)
{
    TripleCertificate cert;
    const int n = h.n;
    auto eb = edge_bits(h);
    auto inc = incidence(h);
    Bits acc(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Bits xy = inc[x] & inc[y];
            for (int z = y + 1; z < n; ++z) {
                Bits fam = xy | (inc[y] & inc[z]) | (inc[x] & inc[z]);
                if (fam.none())
                    continue;
                acc.set();
                for (auto e = fam.find_first(); e != Bits::npos; e = fam.find_next(e)) {
                    acc &= eb[e];
                    if (acc.none())
                        break;
                }
                if (acc.none()) {
                    cert.holds = false;
                    cert.witness = {x, y, z};
                    return cert;
                }
            }
        }
    return cert;
}

bool has_helly_property(const Hypergraph &h)
{
    return berge_duchet(h).holds;
}

bool is_helly(const Hypergraph &h, TripleCertificate *cert)
{
    auto c = berge_duchet(simplify(h));
    if (cert)
        *cert = c;
    return c.holds;
}

bool helly_oracle(const Hypergraph &h)
{
    const std::size_t m = h.edges.size();
    if (m > 24)
        throw ResourceError("exponential Helly oracle limited to 24 edges");
    auto eb = edge_bits(h);
    std::vector<std::vector<char>> meets(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            meets[i][j] = eb[i].intersects(eb[j]);
    std::vector<std::size_t> chosen;
    bool ok = true;
    auto rec = [&](auto &&self, std::size_t start, const Bits &common) -> void {
        for (std::size_t i = start; i < m && ok; ++i) {
            bool pairwise = true;
            for (std::size_t j : chosen)
                if (!meets[i][j]) {
                    pairwise = false;
                    break;
                }
            if (!pairwise)
                continue;
            Bits next = common & eb[i];
            if (next.none()) {
                ok = false;
                return;
            }
            chosen.push_back(i);
            self(self, i + 1, next);
            chosen.pop_back();
        }
    };
    Bits all(static_cast<std::size_t>(h.n));
    all.set();
    rec(rec, 0, all);
    return ok;
}

bool helly_via_maximal_families(const Hypergraph &h)
{
    auto eb = edge_bits(h);
    for (const auto &fam : maximal_cliques(adjacency_bits(nerve_edges(h)))) {
        Bits common(static_cast<std::size_t>(h.n));
        common.set();
        for (int e : fam)
            common &= eb[e];
        if (common.none())
            return false;
    }
    return true;
}

bool is_conformal(const Hypergraph &h, TripleCertificate *cert)
{
    const int m = static_cast<int>(h.edges.size());
    auto eb = edge_bits(h);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Bits ij = eb[i] & eb[j];
            for (int k = j + 1; k < m; ++k) {
                Bits u = ij | (eb[i] & eb[k]) | (eb[j] & eb[k]);
                bool covered = false;
                for (int e = 0; e < m && !covered; ++e)
                    covered = u.is_subset_of(eb[e]);
                if (!covered) {
                    if (cert) {
                        cert->holds = false;
                        cert->witness = {i, j, k};
                    }
                    return false;
                }
            }
        }
    if (cert)
        *cert = TripleCertificate{};
    return true;
}

bool conformal_oracle(const Hypergraph &h)
{
    auto cliques = maximal_cliques(adjacency_bits(two_section_edges(h)));
    auto unc = uncovered_vertices(h);
    for (const auto &c : cliques) {
        bool covered = false;
        for (const auto &e : h.edges)
            if (is_subset(c, e)) {
                covered = true;
                break;
            }
        if (!covered) {
            // a vertex lying in no edge is not part of any clique of H
            if (c.size() == 1 && std::binary_search(unc.begin(), unc.end(), c[0]))
                continue;
            return false;
        }
    }
    return true;
}

bool is_triangle_free_hypergraph(const Hypergraph &h)
{
    auto inc = incidence(h);
    for (int x = 0; x < h.n; ++x)
        for (int y = x + 1; y < h.n; ++y) {
            Bits xy = inc[x] & inc[y];
            if (xy.none())
                continue;
            for (int z = y + 1; z < h.n; ++z) {
                Bits all3 = xy & inc[z];
                // edges through exactly the pairs xy, yz, zx are pairwise disjoint families
                Bits a = xy - all3;
                Bits b = (inc[y] & inc[z]) - all3;
                Bits c = (inc[z] & inc[x]) - all3;
                if (a.any() && b.any() && c.any())
                    return false;
            }
        }
    return true;
}

Hypergraph conformal_closure(const Hypergraph &h)
{
    Hypergraph out = h;
    std::set<VertexSet> present(h.edges.begin(), h.edges.end());
    for (auto &c : maximal_cliques(adjacency_bits(two_section_edges(h)))) {
        if (c.size() == 1) {
            auto unc = uncovered_vertices(h);
            if (std::binary_search(unc.begin(), unc.end(), c[0]))
                continue;
        }
        if (present.insert(c).second)
            out.edges.push_back(c);
    }
    return out;
}

Hypergraph hellyfication_hypergraph(const Hypergraph &h)
{
    Hypergraph out = h;
    auto eb = edge_bits(h);
    auto families = maximal_cliques(adjacency_bits(nerve_edges(h)));
    for (const auto &fam : families) {
        Bits common(static_cast<std::size_t>(h.n));
        common.set();
        for (int e : fam)
            common &= eb[e];
        if (common.any())
            continue;
        const int fresh = out.n++;
        for (int e : fam)
            out.edges[e].push_back(fresh);
    }
    return out;
}

std::vector<int> cell_dimensions(const CellComplex &x)
{
    const std::size_t c = x.cells.size();
    std::vector<std::size_t> order(c);
    for (std::size_t i = 0; i < c; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x.cells[a].size() < x.cells[b].size(); });
    std::vector<int> dim(c, 0);
    for (std::size_t oi = 0; oi < c; ++oi) {
        std::size_t i = order[oi];
        if (x.cells[i].empty()) {
            dim[i] = -1;
            continue;
        }
        int best = -1;
        bool has_face = false;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            std::size_t j = order[oj];
            if (x.cells[j].size() < x.cells[i].size() && is_subset(x.cells[j], x.cells[i])) {
                has_face = true;
                best = std::max(best, dim[j]);
            }
        }
        dim[i] = has_face ? best + 1 : 0;
    }
    return dim;
}

CellConditions check_cell_conditions(const CellComplex &in)
{
    CellComplex x = in;
    std::map<VertexSet, int> index;
    for (std::size_t i = 0; i < x.cells.size(); ++i) {
        x.cells[i] = normalized(x.cells[i]);
        if (!index.emplace(x.cells[i], static_cast<int>(i)).second)
            throw ValidationError("duplicate cell " + to_string(x.cells[i]));
    }
    const int c = static_cast<int>(x.cells.size());
    auto cell_of = [&](const VertexSet &s) -> int {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    };
    std::vector<std::vector<int>> meet(c, std::vector<int>(c, -1));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            auto s = set_intersection(x.cells[i], x.cells[j]);
            meet[i][j] = cell_of(s);
            if (meet[i][j] < 0 && !s.empty())
                throw ValidationError("cells " + to_string(x.cells[i]) + " and " + to_string(x.cells[j]) +
                                      " intersect outside the complex");
        }

    CellConditions res;
    res.dims = cell_dimensions(x);
    const auto &dim = res.dims;
    auto face = [&](int a, int b) { return a >= 0 && b >= 0 && is_subset(x.cells[a], x.cells[b]); };
    auto facet = [&](int a, int b) { return face(a, b) && a != b && dim[a] == dim[b] - 1; };

    for (int i = 0; i < c && res.three_cell; ++i)
        for (int j = i + 1; j < c && res.three_cell; ++j)
            for (int k = j + 1; k < c; ++k) {
                int ij = meet[i][j], ik = meet[i][k], jk = meet[j][k];
                if (!(facet(ij, i) && facet(ij, j) && facet(ik, i) && facet(ik, k) && facet(jk, j) && facet(jk, k)))
                    continue;
                int ijk = meet[ij][k];
                if (!(facet(ijk, ij) && facet(ijk, ik) && facet(ijk, jk)))
                    continue;
                auto u = set_union(set_union(x.cells[i], x.cells[j]), x.cells[k]);
                bool found = false;
                for (int e = 0; e < c && !found; ++e)
                    found = is_subset(u, x.cells[e]);
                if (!found) {
                    res.three_cell = false;
                    res.three_cell_witness = {i, j, k};
                    break;
                }
            }

    for (int cc = 0; cc < c && res.gmc; ++cc) {
        std::vector<int> faces;
        for (int f = 0; f < c; ++f)
            if (face(f, cc))
                faces.push_back(f);
        for (int a : faces) {
            for (int b : faces) {
                int ab = meet[a][b];
                if (x.cells[a].empty() || x.cells[b].empty() || ab < 0 || x.cells[ab].empty())
                    continue;
                if (is_subset(x.cells[b], x.cells[a]))
                    continue;
                bool found = false;
                for (int dd : faces) {
                    if (!facet(a, dd) || dim[dd] != dim[a] + 1)
                        continue;
                    int db = meet[dd][b];
                    if (db >= 0 && dim[db] == dim[ab] + 1) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    res.gmc = false;
                    res.gmc_witness = {cc, a, b};
                    break;
                }
            }
            if (!res.gmc)
                break;
        }
    }

    for (int i = 0; i < c && res.helly3; ++i)
        for (int j = i + 1; j < c && res.helly3; ++j) {
            if (meet[i][j] < 0 || x.cells[meet[i][j]].empty())
                continue;
            for (int k = j + 1; k < c; ++k) {
                if (x.cells[i].empty() || x.cells[j].empty() || x.cells[k].empty())
                    continue;
                auto pij = set_intersection(x.cells[i], x.cells[j]);
                auto pik = set_intersection(x.cells[i], x.cells[k]);
                auto pjk = set_intersection(x.cells[j], x.cells[k]);
                if (pij.empty() || pik.empty() || pjk.empty())
                    continue;
                if (set_intersection(pij, x.cells[k]).empty()) {
                    res.helly3 = false;
                    res.helly3_witness = {i, j, k};
                    break;
                }
            }
        }

    if (res.three_cell && res.gmc && res.helly3 && !is_conformal(cell_hypergraph(x)))
        throw InvariantViolation("cell complex satisfies the 3-cell, GMC and 3-Helly conditions "
                                 "but its cell hypergraph is not conformal");
    return res;
}

Hypergraph cell_hypergraph(const CellComplex &x)
{
    Hypergraph h;
    for (const auto &cell : x.cells)
        for (int v : cell)
            h.n = std::max(h.n, v + 1);
    for (const auto &cell : x.cells)
        if (!cell.empty())
            h.edges.push_back(normalized(cell));
    return h;
}

CellComplex simplex_complex(int k)
{
    CellComplex x;
    const int n = k + 1;
    for (int mask = 0; mask < (1 << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (1 << v))
                s.push_back(v);
        x.cells.push_back(s);
    }
    return x;
}

CellComplex cube_complex(int k)
{
    CellComplex x;
    x.cells.push_back({});
    const int full = (1 << k) - 1;
    for (int freem = 0; freem <= full; ++freem)
        for (int base = 0; base <= full; ++base) {
            if (base & freem)
                continue;
            VertexSet s;
            for (int v = 0; v <= full; ++v)
                if ((v & ~freem) == base)
                    s.push_back(v);
            x.cells.push_back(s);
        }
    return x;
}

} // namespace helly
