// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/symmetry.hpp"

#include "helly/cliques.hpp"
#include "helly/constructions.hpp"
#include "helly/hypergraph.hpp"
#include "helly/recognition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace helly {

void GroupAction::validate(const Graph &g) const
{
    const int n = g.n();
    for (std::size_t k = 0; k < perms.size(); ++k) {
        const Permutation &p = perms[k];
        if (static_cast<int>(p.size()) != n)
            throw ValidationError("generator " + std::to_string(k) + " has length " + std::to_string(p.size()) +
                                  ", expected " + std::to_string(n));
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        for (int x : p) {
            if (x < 0 || x >= n || hit[x])
                throw ValidationError("generator " + std::to_string(k) + " is not a permutation");
            hit[x] = 1;
        }
        for (const Edge &e : g.edges())
            if (!g.adjacent(p[e.first], p[e.second]))
                throw ValidationError("generator " + std::to_string(k) + " maps edge (" + std::to_string(e.first) +
                                      "," + std::to_string(e.second) + ") to a non-edge");
    }
}

Permutation compose(const Permutation &a, const Permutation &b)
{
    Permutation c(b.size());
    for (std::size_t x = 0; x < b.size(); ++x)
        c[x] = a[b[x]];
    return c;
}

Permutation inverse(const Permutation &p)
{
    Permutation q(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        q[p[x]] = static_cast<int>(x);
    return q;
}

Permutation identity_permutation(int n)
{
    Permutation p(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        p[x] = x;
    return p;
}

std::vector<Permutation> close_group(const Graph &g, const GroupAction &a)
{
    a.validate(g);
    const std::size_t cap = limits::max_group();
    std::set<Permutation> seen{identity_permutation(g.n())};
    std::deque<Permutation> queue{identity_permutation(g.n())};
    while (!queue.empty()) {
        const Permutation e = queue.front();
        queue.pop_front();
        for (const Permutation &s : a.perms) {
            Permutation h = compose(s, e);
            if (seen.insert(h).second) {
                if (seen.size() > cap)
                    throw ResourceError("group exceeds HELLY_MAX_GROUP = " + std::to_string(cap));
                queue.push_back(std::move(h));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<VertexSet> orbits(const Graph &g, const GroupAction &a)
{
    a.validate(g);
    std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
    std::vector<VertexSet> out;
    for (int v = 0; v < g.n(); ++v) {
        if (label[v] != -1)
            continue;
        VertexSet orb{v};
        label[v] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const Permutation &p : a.perms)
                if (label[p[orb[i]]] == -1) {
                    label[p[orb[i]]] = label[v];
                    orb.push_back(p[orb[i]]);
                }
        out.push_back(normalized(std::move(orb)));
    }
    return out;
}

bool is_invariant(const VertexSet &s, const std::vector<Permutation> &group)
{
    for (const Permutation &p : group) {
        VertexSet img;
        for (int x : s)
            img.push_back(p[x]);
        std::sort(img.begin(), img.end());
        if (img != s)
            return false;
    }
    return true;
}

std::optional<VertexSet> find_invariant_clique(const Graph &g, const GroupAction &a)
{
    // An invariant clique is a union of orbits that together form a clique.
    std::vector<VertexSet> cand;
    for (const VertexSet &o : orbits(g, a))
        if (is_clique(g, o))
            cand.push_back(o);
    EdgeList compat;
    compat.n = static_cast<int>(cand.size());
    for (int i = 0; i < compat.n; ++i)
        for (int j = i + 1; j < compat.n; ++j)
            if (is_clique(g, set_union(cand[i], cand[j])))
                compat.edges.emplace_back(i, j);
    std::optional<VertexSet> best;
    if (compat.n == 0)
        return best;
    for (const VertexSet &c : all_cliques(adjacency_bits(compat))) {
        VertexSet u;
        for (int i : c)
            u = set_union(u, cand[i]);
        if (!best || u.size() < best->size() || (u.size() == best->size() && u < *best))
            best = std::move(u);
    }
    return best;
}

VertexSet fixed_clique(const Graph &g, const GroupAction &a)
{
    a.validate(g);
    if (!is_helly_graph(g))
        throw DomainError("fixed_clique: the graph is not Helly");
    std::optional<VertexSet> k = find_invariant_clique(g, a);
    if (!k)
        throw InvariantViolation("Helly graph without an invariant clique");
    if (!is_invariant(*k, close_group(g, a)))
        throw InvariantViolation("fixed_clique returned a non-invariant set");
    return *k;
}

HullOrbitResult hull_orbit_fixed_clique(const Graph &g, const GroupAction &a, int v)
{
    a.validate(g);
    if (v < 0 || v >= g.n())
        throw ValidationError("vertex out of range: " + std::to_string(v));
    HullOrbitResult res;
    for (const VertexSet &o : orbits(g, a))
        if (std::binary_search(o.begin(), o.end(), v))
            res.orbit = o;
    const FiniteMetric m = metric_of(g, res.orbit);
    res.hull = hellyfication(m);
    std::vector<int> where(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < res.orbit.size(); ++i)
        where[res.orbit[i]] = static_cast<int>(i);
    for (const Permutation &p : a.perms) {
        const Permutation pinv = inverse(p);
        Permutation hp(res.hull.forms.size());
        for (std::size_t f = 0; f < res.hull.forms.size(); ++f) {
            const MetricForm &src = res.hull.forms[f];
            MetricForm img(src.size());
            for (std::size_t i = 0; i < res.orbit.size(); ++i)
                img[i] = src[where[pinv[res.orbit[i]]]];
            if (!is_extremal(m, img))
                throw InvariantViolation("group action does not preserve extremal forms");
            auto it = std::lower_bound(res.hull.forms.begin(), res.hull.forms.end(), img);
            if (it == res.hull.forms.end() || *it != img)
                throw InvariantViolation("image of an extremal form is missing from the hull");
            hp[f] = static_cast<int>(it - res.hull.forms.begin());
        }
        res.hull_action.perms.push_back(std::move(hp));
    }
    res.clique = fixed_clique(res.hull.graph(), res.hull_action);
    for (int f : res.clique)
        res.forms.push_back(res.hull.forms[f]);
    return res;
}

FixedFaceResult fixed_face_subgraph(const Graph &g, const GroupAction &a)
{
    const std::vector<Permutation> group = close_group(g, a);
    const FaceGraph fg = face_graph(g);
    FixedFaceResult res;
    VertexSet keep;
    for (std::size_t i = 0; i < fg.faces.size(); ++i)
        if (is_invariant(fg.faces[i], group)) {
            keep.push_back(static_cast<int>(i));
            res.faces.push_back(fg.faces[i]);
        }
    res.edges = induced_edges(fg.graph, keep);
    if (!keep.empty() && is_connected(res.edges))
        res.graph = Graph(res.edges);

    if (is_clique_helly(g) && !keep.empty()) {
        Hypergraph cl{res.edges.n, maximal_cliques(adjacency_bits(res.edges))};
        if (!has_helly_property(cl))
            throw InvariantViolation("fixed face subgraph of a clique-Helly graph is not clique-Helly");
    }
    if (is_helly_graph(g) && (!res.graph || !is_helly_graph(*res.graph)))
        throw InvariantViolation("fixed face subgraph of a Helly graph is not Helly");
    return res;
}

} // namespace helly
