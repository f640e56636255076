// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace helly {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

std::vector<std::vector<int>> build_adjacency(int n, const std::vector<Edge> &edges, bool reject_duplicates)
{
    if (n < 1)
        throw ValidationError("graph must have at least one vertex");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw ValidationError("loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto &a = adj[v];
        std::sort(a.begin(), a.end());
        auto it = std::adjacent_find(a.begin(), a.end());
        if (it != a.end()) {
            if (reject_duplicates)
                throw ValidationError("parallel edge (" + std::to_string(v) + "," + std::to_string(*it) + ")");
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
    }
    return adj;
}

} // namespace

Graph::Graph(int n, const std::vector<Edge> &edges) : n_(n)
{
    if (n > 0 && static_cast<std::size_t>(n) > limits::max_vertices())
        throw ResourceError("graph with " + std::to_string(n) +
                            " vertices exceeds HELLY_MAX_VERTICES=" + std::to_string(limits::max_vertices()));
    adj_ = build_adjacency(n, edges, true);
    m_ = edges.size();

    const auto nn = static_cast<std::size_t>(n);
    d_.assign(nn * nn, kUnreached);
    ecc_.assign(nn, 0);
    std::vector<int> queue(nn);
    for (int s = 0; s < n; ++s) {
        std::uint16_t *row = &d_[static_cast<std::size_t>(s) * nn];
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        row[s] = 0;
        while (head < tail) {
            int x = queue[head++];
            for (int y : adj_[x]) {
                if (row[y] == kUnreached) {
                    row[y] = static_cast<std::uint16_t>(row[x] + 1);
                    queue[tail++] = y;
                }
            }
        }
        if (tail != nn)
            throw ValidationError("graph is disconnected (vertex " + std::to_string(s) + " reaches " +
                                  std::to_string(tail) + " of " + std::to_string(n) + " vertices)");
        ecc_[s] = row[queue[tail - 1]];
        diam_ = std::max(diam_, ecc_[s]);
    }

    nbhd_.assign(nn, Bits(nn));
    for (int v = 0; v < n; ++v) {
        nbhd_[v].set(v);
        for (int w : adj_[v])
            nbhd_[v].set(w);
    }
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool is_connected(const EdgeList &el)
{
    if (el.n < 1)
        return false;
    auto adj = build_adjacency(el.n, el.edges, false);
    std::vector<char> seen(static_cast<std::size_t>(el.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
    }
    return count == el.n;
}

std::vector<std::vector<int>> distances(const Graph &g)
{
    std::vector<std::vector<int>> d(g.n(), std::vector<int>(g.n()));
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            d[u][v] = g.dist(u, v);
    return d;
}

Bits interval_bits(const Graph &g, int u, int v)
{
    Bits b(g.n());
    const int k = g.dist(u, v);
    for (int x = 0; x < g.n(); ++x)
        if (g.dist(u, x) + g.dist(x, v) == k)
            b.set(x);
    return b;
}

VertexSet interval(const Graph &g, int u, int v)
{
    return from_bits(interval_bits(g, u, v));
}

VertexSet ball(const Graph &g, const VertexSet &center, int r)
{
    VertexSet out;
    for (int x = 0; x < g.n(); ++x)
        for (int c : center)
            if (g.dist(x, c) <= r) {
                out.push_back(x);
                break;
            }
    return out;
}

Bits ball_star_bits(const Graph &g, const VertexSet &s, int r)
{
    Bits b(g.n());
    for (int x = 0; x < g.n(); ++x) {
        bool in = true;
        for (int c : s)
            if (g.dist(x, c) > r) {
                in = false;
                break;
            }
        if (in)
            b.set(x);
    }
    return b;
}

VertexSet ball_star(const Graph &g, const VertexSet &s, int r)
{
    return from_bits(ball_star_bits(g, s, r));
}

GateResult is_gated(const Graph &g, const VertexSet &h)
{
    if (h.empty())
        throw ValidationError("is_gated requires a nonempty set");
    GateResult res;
    res.gate.assign(g.n(), -1);
    Bits inside = to_bits(h, g.n());
    res.gated = true;
    for (int x = 0; x < g.n(); ++x) {
        if (inside.test(x)) {
            res.gate[x] = x;
            continue;
        }
        int best = h.front();
        for (int y : h)
            if (g.dist(x, y) < g.dist(x, best))
                best = y;
        bool ok = true;
        for (int y : h)
            if (g.dist(x, best) + g.dist(best, y) != g.dist(x, y)) {
                ok = false;
                break;
            }
        if (!ok) {
            res.gated = false;
            res.failing_vertex = x;
            res.gate.assign(g.n(), -1);
            return res;
        }
        res.gate[x] = best;
    }
    return res;
}

bool is_convex(const Graph &g, const VertexSet &s)
{
    Bits inside = to_bits(s, g.n());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!interval_bits(g, s[i], s[j]).is_subset_of(inside))
                return false;
    return true;
}

WeakModularityReport weak_modularity(const Graph &g)
{
    WeakModularityReport rep;
    const int n = g.n();
    for (int u = 0; u < n && rep.tc_holds; ++u) {
        for (int v = 0; v < n && rep.tc_holds; ++v) {
            const int k = g.dist(u, v);
            if (k < 2)
                continue;
            for (int w : g.neighbors(v)) {
                if (w <= v || g.dist(u, w) != k)
                    continue;
                bool found = false;
                for (int x : g.neighbors(v))
                    if (x != w && g.adjacent(x, w) && g.dist(u, x) == k - 1) {
                        found = true;
                        break;
                    }
                if (!found) {
                    rep.tc_holds = false;
                    rep.tc_witness = {u, v, w};
                    break;
                }
            }
        }
    }
    for (int u = 0; u < n && rep.qc_holds; ++u) {
        for (int z = 0; z < n && rep.qc_holds; ++z) {
            const int k = g.dist(u, z);
            if (k < 3)
                continue; // for k = 2 the vertex u itself is the common neighbour
            std::vector<int> lower;
            for (int v : g.neighbors(z))
                if (g.dist(u, v) == k - 1)
                    lower.push_back(v);
            for (std::size_t a = 0; a < lower.size() && rep.qc_holds; ++a)
                for (std::size_t b = a + 1; b < lower.size(); ++b) {
                    int v = lower[a], w = lower[b];
                    bool found = false;
                    for (int x : g.neighbors(v))
                        if (x != w && g.adjacent(x, w) && g.dist(u, x) == k - 2) {
                            found = true;
                            break;
                        }
                    if (!found) {
                        rep.qc_holds = false;
                        rep.qc_witness = {u, z, v, w};
                        break;
                    }
                }
        }
    }
    return rep;
}

bool is_pseudo_modular(const Graph &g, std::vector<int> *witness)
{
    const int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            const int duw = g.dist(u, w);
            if (duw < 1 || duw > 2)
                continue;
            std::vector<int> common;
            for (int x : g.neighbors(u))
                if (x != w && g.adjacent(x, w))
                    common.push_back(x);
            for (int v = 0; v < n; ++v) {
                const int k = g.dist(v, u);
                if (k < 2 || g.dist(v, w) != k)
                    continue;
                bool found = false;
                for (int x : common)
                    if (g.dist(v, x) == k - 1) {
                        found = true;
                        break;
                    }
                if (!found) {
                    if (witness)
                        *witness = {u, v, w};
                    return false;
                }
            }
        }
    return true;
}

MetricTriangle quasi_median(const Graph &g, int x, int y, int z)
{
    auto pick = [&](int from, int a1, int b1, int a2, int b2) {
        // vertex of I(a1,b1) ∩ I(a2,b2) farthest from `from`, smallest id on ties
        int best = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (g.dist(a1, v) + g.dist(v, b1) != g.dist(a1, b1))
                continue;
            if (g.dist(a2, v) + g.dist(v, b2) != g.dist(a2, b2))
                continue;
            if (best < 0 || g.dist(from, v) > g.dist(from, best))
                best = v;
        }
        return best;
    };
    MetricTriangle t;
    t.v1 = pick(x, x, y, x, z);
    t.v2 = pick(y, y, t.v1, y, z);
    t.v3 = pick(z, z, t.v1, z, t.v2);
    const int a = g.dist(t.v1, t.v2), b = g.dist(t.v2, t.v3), c = g.dist(t.v3, t.v1);
    t.size = std::max({a, b, c});
    t.equilateral = (a == b && b == c);
    return t;
}

bool is_metric_triangle(const Graph &g, int v1, int v2, int v3)
{
    const int vs[3] = {v1, v2, v3};
    for (int i = 0; i < 3; ++i) {
        int a = vs[i], b = vs[(i + 1) % 3], c = vs[(i + 2) % 3];
        Bits common = interval_bits(g, a, b) & interval_bits(g, a, c);
        if (common.count() != 1 || !common.test(a))
            return false;
    }
    return true;
}

bool is_isometric_embedding(const Graph &g, const Graph &h, const std::vector<int> &map)
{
    if (static_cast<int>(map.size()) != g.n())
        return false;
    for (int x : map)
        if (x < 0 || x >= h.n())
            return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (h.dist(map[u], map[v]) != g.dist(u, v))
                return false;
    return true;
}

EdgeList induced_edges(const Graph &g, const VertexSet &vs)
{
    EdgeList el;
    el.n = static_cast<int>(vs.size());
    for (int i = 0; i < el.n; ++i)
        for (int j = i + 1; j < el.n; ++j)
            if (g.adjacent(vs[i], vs[j]))
                el.edges.emplace_back(i, j);
    return el;
}

Graph induced_subgraph(const Graph &g, const VertexSet &vs)
{
    return Graph(induced_edges(g, vs));
}

int dist_to_set(const Graph &g, int v, const VertexSet &s)
{
    int best = std::numeric_limits<int>::max();
    for (int x : s)
        best = std::min(best, g.dist(v, x));
    return best;
}

int set_distance(const Graph &g, const VertexSet &a, const VertexSet &b)
{
    int best = std::numeric_limits<int>::max();
    for (int x : a)
        for (int y : b)
            best = std::min(best, g.dist(x, y));
    return best;
}

int set_distance_max(const Graph &g, const VertexSet &a, const VertexSet &b)
{
    int best = 0;
    for (int x : a)
        for (int y : b)
            best = std::max(best, g.dist(x, y));
    return best;
}

bool is_clique(const Graph &g, const VertexSet &s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j]))
                return false;
    return true;
}

} // namespace helly
