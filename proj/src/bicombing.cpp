// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/bicombing.hpp"

#include "helly/cliques.hpp"
#include "helly/recognition.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace helly {

namespace {

void require_clique(const Graph &g, const VertexSet &c, const char *what)
{
    if (c.empty())
        throw ValidationError(std::string(what) + " is empty");
    for (int v : c)
        if (v < 0 || v >= g.n())
            throw ValidationError(std::string(what) + " has a vertex out of range");
    if (!is_clique(g, c))
        throw ValidationError(std::string(what) + " is not a clique: " + to_string(c));
}

// vertices adjacent or equal to every member of s
Bits common_closed(const Graph &g, const VertexSet &s)
{
    Bits b(static_cast<std::size_t>(g.n()));
    b.set();
    for (int v : s)
        b &= g.closed_nbhd(v);
    return b;
}

// nonempty cliques inside w, ordered by (size, lex)
std::vector<VertexSet> cliques_within(const Graph &g, const VertexSet &w)
{
    std::vector<Bits> adj(w.size(), Bits(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (g.adjacent(w[i], w[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    auto local = all_cliques(adj);
    for (auto &c : local)
        for (int &v : c)
            v = w[v];
    return local;
}

} // namespace

std::optional<int> uniform_distance(const Graph &g, const VertexSet &a, const VertexSet &b)
{
    int lo = set_distance(g, a, b), hi = set_distance_max(g, a, b);
    if (lo != hi)
        return std::nullopt;
    return lo;
}

VertexSet imprint(const Graph &g, const VertexSet &tau, const VertexSet &sigma)
{
    require_clique(g, tau, "tau");
    require_clique(g, sigma, "sigma");
    const int k = set_distance_max(g, tau, sigma);
    if (k < 2)
        throw DomainError("imprint needs max distance at least 2, got " + std::to_string(k));
    Bits r_hat = ball_star_bits(g, tau, k) & common_closed(g, sigma);
    Bits f = ball_star_bits(g, tau, k - 1);
    for (auto r = r_hat.find_first(); r != Bits::npos; r = r_hat.find_next(r))
        f &= g.closed_nbhd(static_cast<int>(r));
    if (f.none())
        throw PreconditionError("empty imprint of " + to_string(sigma) + " w.r.t. " + to_string(tau) +
                                "; the graph is not Helly");
    return from_bits(f);
}

CliquePath normal_clique_path(const Graph &g, const VertexSet &tau, const VertexSet &sigma)
{
    require_clique(g, tau, "tau");
    require_clique(g, sigma, "sigma");
    auto k = uniform_distance(g, tau, sigma);
    if (!k)
        throw DomainError("cliques " + to_string(tau) + " and " + to_string(sigma) + " are not at uniform distance");
    CliquePath p(static_cast<std::size_t>(*k + 1));
    p.front() = normalized(tau);
    p.back() = normalized(sigma);
    for (int i = *k - 1; i >= 1; --i)
        p[i] = imprint(g, tau, p[i + 1]);
    return p;
}

bool verify_normal_clique_path(const Graph &g, const CliquePath &p)
{
    for (const auto &c : p) {
        if (c.empty() || !std::is_sorted(c.begin(), c.end()))
            return false;
        for (int v : c)
            if (v < 0 || v >= g.n())
                return false;
        if (!is_clique(g, c))
            return false;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!set_intersection(p[i], p[i + 1]).empty() || !is_clique(g, set_union(p[i], p[i + 1])))
            return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (uniform_distance(g, p[i - 1], p[i + 1]) != 2)
            return false;
        VertexSet f;
        try {
            f = imprint(g, p[i - 1], p[i + 1]);
        } catch (const PreconditionError &) {
            return false;
        }
        if (f != p[i])
            return false;
    }
    return true;
}

bool is_normal_path(const Graph &g, const std::vector<int> &seq)
{
    if (seq.empty())
        return false;
    for (int v : seq)
        if (v < 0 || v >= g.n())
            return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[i + 1]))
            return false;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        if (g.dist(seq[i - 1], seq[i + 1]) != 2)
            return false;
        VertexSet f;
        try {
            f = imprint(g, {seq[i - 1]}, {seq[i + 1]});
        } catch (const PreconditionError &) {
            return false;
        }
        if (!std::binary_search(f.begin(), f.end(), seq[i]))
            return false;
    }
    return true;
}

std::vector<std::vector<int>> normal_paths(const Graph &g, int t, int s, std::size_t cap)
{
    if (t < 0 || t >= g.n() || s < 0 || s >= g.n())
        throw ValidationError("vertex out of range");
    const int k = g.dist(t, s);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k + 1));
    cur[0] = t;
    cur[k] = s;
    auto rec = [&](auto &&self, int i) -> void {
        if (i == 0) {
            if (out.size() >= cap)
                throw ResourceError("normal path count exceeds cap " + std::to_string(cap));
            out.push_back(cur);
            return;
        }
        for (int v : imprint(g, {t}, {cur[i + 1]})) {
            cur[i] = v;
            self(self, i - 1);
        }
    };
    if (k <= 1)
        out.push_back(cur);
    else
        rec(rec, k - 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> normal_path_positions(const Graph &g, int t, int s)
{
    const int k = g.dist(t, s);
    std::vector<VertexSet> pos(static_cast<std::size_t>(k + 1));
    pos[0] = {t};
    pos[k] = {s};
    for (int i = k - 1; i >= 1; --i) {
        VertexSet acc;
        for (int v : pos[i + 1])
            acc = set_union(acc, imprint(g, {t}, {v}));
        pos[i] = acc;
    }
    return pos;
}

FellowTravelerResult fellow_traveler_check(const Graph &g, std::uint64_t seed, int exhaustive_limit, long samples)
{
    if (!is_helly_graph(g))
        throw DomainError("fellow traveler check needs a Helly graph");
    const int n = g.n();
    std::unordered_map<long, CliquePath> gamma;
    std::unordered_map<long, std::vector<VertexSet>> positions;
    auto key = [n](int a, int b) { return static_cast<long>(a) * n + b; };
    auto gamma_of = [&](int a, int b) -> const CliquePath & {
        auto it = gamma.find(key(a, b));
        if (it == gamma.end())
            it = gamma.emplace(key(a, b), normal_clique_path(g, {a}, {b})).first;
        return it->second;
    };
    auto positions_of = [&](int a, int b) -> const std::vector<VertexSet> & {
        auto it = positions.find(key(a, b));
        if (it == positions.end())
            it = positions.emplace(key(a, b), normal_path_positions(g, a, b)).first;
        return it->second;
    };

    FellowTravelerResult res;
    auto measure = [&](int p, int q, int s, int t) {
        // the longer pair plays (p, sigma)
        if (g.dist(p, s) < g.dist(q, t)) {
            std::swap(p, q);
            std::swap(s, t);
        }
        const CliquePath &a = gamma_of(p, s), &b = gamma_of(q, t);
        const auto &pa = positions_of(p, s), &pb = positions_of(q, t);
        const std::size_t k = b.size() - 1;
        int cc = 0, pc = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::size_t j = std::min(i, k);
            cc = std::max(cc, set_distance(g, a[i], b[j]));
            pc = std::max(pc, set_distance_max(g, pa[i], pb[j]));
        }
        if (cc > res.clique_constant) {
            res.clique_constant = cc;
            res.clique_witness = {p, q, s, t};
        }
        if (pc > res.path_constant) {
            res.path_constant = pc;
            res.path_witness = {p, q, s, t};
        }
        ++res.tuples;
    };

    res.exhaustive = n <= exhaustive_limit;
    if (res.exhaustive) {
        for (int p = 0; p < n; ++p)
            for (auto q = g.closed_nbhd(p).find_first(); q != Bits::npos; q = g.closed_nbhd(p).find_next(q))
                for (int s = 0; s < n; ++s)
                    for (auto t = g.closed_nbhd(s).find_first(); t != Bits::npos; t = g.closed_nbhd(s).find_next(t))
                        measure(p, static_cast<int>(q), s, static_cast<int>(t));
    } else {
        std::mt19937_64 rng(seed);
        auto pick = [&](int v) {
            VertexSet nb = from_bits(g.closed_nbhd(v));
            return nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
        };
        std::uniform_int_distribution<int> any(0, n - 1);
        for (long i = 0; i < samples; ++i) {
            int p = any(rng), q = pick(p), s = any(rng), t = pick(s);
            measure(p, q, s, t);
        }
    }
    if (res.clique_constant > 1)
        throw InvariantViolation("clique-path fellow traveler constant " + std::to_string(res.clique_constant) +
                                 " exceeds 1 at " +
                                 to_string(VertexSet(res.clique_witness.begin(), res.clique_witness.end())));
    if (res.path_constant > 3)
        throw InvariantViolation("normal path fellow traveler constant " + std::to_string(res.path_constant) +
                                 " exceeds 3 at " +
                                 to_string(VertexSet(res.path_witness.begin(), res.path_witness.end())));
    return res;
}

bool local_recognition_radius_check(const Graph &g)
{
    for (int b = 0; b < g.n(); ++b) {
        VertexSet ball2 = ball(g, {b}, 2);
        Graph h = induced_subgraph(g, ball2);
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(ball2.begin(), ball2.end(), v) - ball2.begin());
        };
        for (int a : g.neighbors(b))
            for (int c : g.neighbors(b)) {
                if (a == c)
                    continue;
                bool global = is_normal_path(g, {a, b, c});
                bool inside = is_normal_path(h, {local(a), local(b), local(c)});
                if (global != inside)
                    return false;
            }
    }
    return true;
}

UniquenessReport clique_path_uniqueness_check(const Graph &g)
{
    UniquenessReport rep;
    const int limit = g.diameter() + 1;
    CliquePath path;
    auto uniform2 = [&](const VertexSet &c) {
        Bits b(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) {
            bool ok = true;
            for (int x : c)
                ok = ok && g.dist(v, x) == 2;
            if (ok)
                b.set(v);
        }
        return b;
    };
    auto extend = [&](auto &&self) -> void {
        if (!rep.holds || static_cast<int>(path.size()) > limit)
            return;
        const VertexSet prev = path[path.size() - 2], last = path.back();
        Bits w = common_closed(g, last) & uniform2(prev);
        for (int v : last)
            w.reset(v);
        for (const auto &next : cliques_within(g, from_bits(w))) {
            if (imprint(g, prev, next) != last)
                continue;
            path.push_back(next);
            // paths may pass through or end at non-uniform pairs; only uniform ends are claimed
            auto k = uniform_distance(g, path.front(), next);
            if (k)
                ++rep.paths;
            if (k && (*k + 1 != static_cast<int>(path.size()) || normal_clique_path(g, path.front(), next) != path)) {
                rep.holds = false;
                rep.counterexample = path;
                return;
            }
            self(self);
            path.pop_back();
            if (!rep.holds)
                return;
        }
    };
    for (const auto &tau : all_cliques(adjacency_bits(g))) {
        Bits far = uniform2(tau);
        Bits first = common_closed(g, tau);
        for (int v : tau)
            first.reset(v);
        // a second step needs a neighbour at uniform distance 2 from tau
        for (auto v = first.find_first(); v != Bits::npos; v = first.find_next(v))
            if (!g.closed_nbhd(static_cast<int>(v)).intersects(far))
                first.reset(v);
        for (const auto &rho : cliques_within(g, from_bits(first))) {
            path = {tau, rho};
            extend(extend);
            if (!rep.holds)
                return rep;
        }
    }
    return rep;
}

} // namespace helly
