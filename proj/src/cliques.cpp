// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/cliques.hpp"

#include <algorithm>

namespace helly {

std::vector<Bits> adjacency_bits(const EdgeList &el)
{
    std::vector<Bits> adj(static_cast<std::size_t>(el.n), Bits(static_cast<std::size_t>(el.n)));
    for (auto [u, v] : el.edges) {
        adj[u].set(v);
        adj[v].set(u);
    }
    return adj;
}

std::vector<Bits> adjacency_bits(const Graph &g)
{
    std::vector<Bits> adj(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        adj[v] = g.closed_nbhd(v);
        adj[v].reset(v);
    }
    return adj;
}

namespace {

struct BronKerbosch {
    const std::vector<Bits> &adj;
    std::size_t cap;
    std::vector<VertexSet> out;
    VertexSet r;

    void run(Bits p, Bits x)
    {
        if (p.none()) {
            if (x.none()) {
                if (out.size() >= cap)
                    throw ResourceError("maximal clique count exceeds cap " + std::to_string(cap));
                VertexSet c = r;
                std::sort(c.begin(), c.end());
                out.push_back(std::move(c));
            }
            return;
        }
        // Tomita pivot: vertex of P ∪ X with most neighbours in P
        Bits px = p | x;
        std::size_t pivot = px.find_first();
        std::size_t best = 0;
        for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
            std::size_t c = (p & adj[u]).count();
            if (c > best || u == px.find_first()) {
                best = c;
                pivot = u;
            }
        }
        Bits cand = p - adj[pivot];
        for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
            r.push_back(static_cast<int>(v));
            run(p & adj[v], x & adj[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

} // namespace

std::vector<VertexSet> maximal_cliques(const std::vector<Bits> &adj, std::size_t cap)
{
    const std::size_t n = adj.size();
    BronKerbosch bk{adj, cap ? cap : limits::max_cliques(), {}, {}};
    if (n == 0)
        return {};
    Bits p(n);
    p.set();
    bk.run(p, Bits(n));
    std::sort(bk.out.begin(), bk.out.end());
    return std::move(bk.out);
}

std::vector<VertexSet> all_cliques(const std::vector<Bits> &adj, std::size_t cap)
{
    const std::size_t n = adj.size();
    const std::size_t limit = cap ? cap : limits::max_cliques();
    std::vector<VertexSet> out;
    VertexSet cur;
    // extend only with larger ids so each clique is produced once
    auto rec = [&](auto &&self, const Bits &cand) -> void {
        for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
            cur.push_back(static_cast<int>(v));
            if (out.size() >= limit)
                throw ResourceError("clique count exceeds cap " + std::to_string(limit));
            out.push_back(cur);
            Bits higher = cand & adj[v];
            for (auto w = higher.find_first(); w != Bits::npos && w < v; w = higher.find_next(w))
                higher.reset(w);
            self(self, higher);
            cur.pop_back();
        }
    };
    Bits all(n);
    all.set();
    rec(rec, all);
    std::sort(out.begin(), out.end(), [](const VertexSet &a, const VertexSet &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

} // namespace helly
