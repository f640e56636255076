// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/recognition.hpp"

#include "helly/cliques.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace helly {

std::vector<VertexSet> maximal_cliques(const Graph &g)
{
    return maximal_cliques(adjacency_bits(g));
}

Hypergraph clique_hypergraph(const Graph &g)
{
    return Hypergraph{g.n(), maximal_cliques(g)};
}

Hypergraph ball_hypergraph(const Graph &g)
{
    Hypergraph h;
    h.n = g.n();
    for (int v = 0; v < g.n(); ++v)
        for (int r = 0; r <= g.eccentricity(v); ++r)
            h.edges.push_back(ball(g, {v}, r));
    return h;
}

Hypergraph unit_ball_hypergraph(const Graph &g)
{
    Hypergraph h;
    h.n = g.n();
    for (int v = 0; v < g.n(); ++v)
        h.edges.push_back(from_bits(g.closed_nbhd(v)));
    return h;
}

bool is_clique_helly(const Graph &g, std::array<int, 3> *witness)
{
    const int n = g.n();
    Bits star(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a)
                continue;
            for (int c : g.neighbors(b)) {
                if (c <= b || !g.adjacent(a, c))
                    continue;
                const Bits &na = g.closed_nbhd(a), &nb = g.closed_nbhd(b), &nc = g.closed_nbhd(c);
                // vertices adjacent (or equal) to at least two of a, b, c
                star = (na & nb) | (nb & nc) | (na & nc);
                bool found = false;
                for (auto u = star.find_first(); u != Bits::npos && !found; u = star.find_next(u))
                    found = star.is_subset_of(g.closed_nbhd(static_cast<int>(u)));
                if (!found) {
                    if (witness)
                        *witness = {a, b, c};
                    return false;
                }
            }
        }
    return true;
}

bool is_one_helly(const Graph &g, std::array<int, 3> *witness)
{
    const int n = g.n();
    Bits acc(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Bits xy = g.closed_nbhd(x) & g.closed_nbhd(y);
            for (int z = y + 1; z < n; ++z) {
                // centres v whose unit ball contains at least two of x, y, z
                Bits centres = xy | (g.closed_nbhd(y) & g.closed_nbhd(z)) | (g.closed_nbhd(x) & g.closed_nbhd(z));
                if (centres.none())
                    continue;
                acc.set();
                for (auto v = centres.find_first(); v != Bits::npos; v = centres.find_next(v)) {
                    acc &= g.closed_nbhd(static_cast<int>(v));
                    if (acc.none())
                        break;
                }
                if (acc.none()) {
                    if (witness)
                        *witness = {x, y, z};
                    return false;
                }
            }
        }
    return true;
}

bool is_ball_helly(const Graph &g, std::array<int, 3> *witness)
{
    const int n = g.n();
    std::vector<std::vector<Bits>> balls(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        balls[v].assign(static_cast<std::size_t>(g.eccentricity(v) + 1), Bits(static_cast<std::size_t>(n)));
        for (int x = 0; x < n; ++x)
            for (int r = g.dist(v, x); r <= g.eccentricity(v); ++r)
                balls[v][r].set(x);
    }
    Bits acc(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                acc.set();
                for (int v = 0; v < n; ++v) {
                    int a = g.dist(v, x), b = g.dist(v, y), c = g.dist(v, z);
                    // smallest ball around v holding two of the three has the median radius
                    int med = std::max(std::min(a, b), std::min(std::max(a, b), c));
                    if (med >= g.eccentricity(v))
                        continue;
                    acc &= balls[v][med];
                    if (acc.none()) {
                        if (witness)
                            *witness = {x, y, z};
                        return false;
                    }
                }
            }
    return true;
}

bool ball_helly_oracle(const Graph &g)
{
    if (g.n() > 10)
        throw ResourceError("ball Helly oracle is limited to 10 vertices");
    Hypergraph h = ball_hypergraph(g);
    std::sort(h.edges.begin(), h.edges.end());
    h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
    return helly_via_maximal_families(h);
}

namespace {

// x is dominated by y inside `alive` when N[x] ∩ alive ⊆ N[y]
int find_dominator(const Graph &g, int x, const Bits &alive)
{
    Bits nx = g.closed_nbhd(x) & alive;
    for (auto y = nx.find_first(); y != Bits::npos; y = nx.find_next(y))
        if (static_cast<int>(y) != x && nx.is_subset_of(g.closed_nbhd(static_cast<int>(y))))
            return static_cast<int>(y);
    return -1;
}

bool exhaustive_dismantle(const Graph &g, std::uint32_t mask, std::unordered_set<std::uint32_t> &dead,
                          std::vector<int> &order, std::vector<int> &dom)
{
    if ((mask & (mask - 1)) == 0)
        return true;
    if (dead.count(mask))
        return false;
    Bits alive(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        if (mask & (1u << v))
            alive.set(v);
    for (int x = 0; x < g.n(); ++x) {
        if (!(mask & (1u << x)))
            continue;
        int y = find_dominator(g, x, alive);
        if (y < 0)
            continue;
        order.push_back(x);
        dom.push_back(y);
        if (exhaustive_dismantle(g, mask & ~(1u << x), dead, order, dom))
            return true;
        order.pop_back();
        dom.pop_back();
    }
    dead.insert(mask);
    return false;
}

} // namespace

DismantlingOrder dismantling_order(const Graph &g, std::uint64_t seed)
{
    const int n = g.n();
    std::vector<int> priority(static_cast<std::size_t>(n));
    std::iota(priority.begin(), priority.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(priority.begin(), priority.end(), rng);
    }
    DismantlingOrder res;
    Bits alive(static_cast<std::size_t>(n));
    alive.set();
    int remaining = n;
    while (remaining > 1) {
        int chosen = -1, by = -1;
        for (int x : priority) {
            if (!alive.test(x))
                continue;
            int y = find_dominator(g, x, alive);
            if (y >= 0) {
                chosen = x;
                by = y;
                break;
            }
        }
        if (chosen < 0)
            break;
        res.order.push_back(chosen);
        res.dominator.push_back(by);
        alive.reset(chosen);
        --remaining;
    }
    if (remaining == 1) {
        res.order.push_back(static_cast<int>(alive.find_first()));
        res.dominator.push_back(-1);
        return res;
    }
    res.stuck = from_bits(alive);
    if (n > 14) {
        res.status = DismantlingStatus::GreedyStuck;
        return res;
    }
    std::unordered_set<std::uint32_t> dead;
    std::vector<int> order, dom;
    if (exhaustive_dismantle(g, (1u << n) - 1, dead, order, dom)) {
        // greedy was unlucky; report the certified order instead
        Bits left(static_cast<std::size_t>(n));
        left.set();
        for (int x : order)
            left.reset(x);
        order.push_back(static_cast<int>(left.find_first()));
        dom.push_back(-1);
        res.order = order;
        res.dominator = dom;
        res.stuck.clear();
        res.status = DismantlingStatus::Dismantled;
        return res;
    }
    res.status = DismantlingStatus::Stuck;
    return res;
}

bool verify_dismantling(const Graph &g, const DismantlingOrder &d)
{
    if (!d.success() || static_cast<int>(d.order.size()) != g.n() || d.dominator.size() != d.order.size())
        return false;
    Bits alive(static_cast<std::size_t>(g.n()));
    alive.set();
    for (std::size_t i = 0; i + 1 < d.order.size(); ++i) {
        int x = d.order[i], y = d.dominator[i];
        if (x < 0 || x >= g.n() || y < 0 || y >= g.n() || x == y || !alive.test(x) || !alive.test(y))
            return false;
        if (!(g.closed_nbhd(x) & alive).is_subset_of(g.closed_nbhd(y)))
            return false;
        alive.reset(x);
    }
    return alive.count() == 1 && alive.test(d.order.back());
}

HellyReport is_helly(const Graph &g, int ball_route_limit)
{
    HellyReport rep;
    std::array<int, 3> w{};
    rep.is_clique_helly = is_clique_helly(g, &w);
    if (!rep.is_clique_helly)
        rep.clique_helly_witness = w;
    rep.is_one_helly = is_one_helly(g, &w);
    if (!rep.is_one_helly)
        rep.one_helly_witness = w;
    rep.dismantling = dismantling_order(g);
    rep.is_weakly_modular = (rep.weak_modularity = weak_modularity(g)).weakly_modular();

    const bool route_a = rep.dismantling.success() && rep.is_clique_helly;
    const bool route_b = rep.is_weakly_modular && rep.is_one_helly;
    if (rep.dismantling.status == DismantlingStatus::GreedyStuck && route_b)
        throw InvariantViolation("greedy dismantling got stuck on a weakly modular 1-Helly graph");
    if (route_a != route_b)
        throw InvariantViolation(std::string("Helly recognition routes disagree: dismantlable+clique-Helly=") +
                                 (route_a ? "true" : "false") +
                                 ", weakly modular+1-Helly=" + (route_b ? "true" : "false"));
    rep.is_dismantlable = rep.dismantling.success();
    rep.is_helly = route_a;
    if (g.n() <= ball_route_limit) {
        rep.ball_route_checked = true;
        bool balls = is_ball_helly(g, &w);
        if (!balls)
            rep.ball_witness = w;
        if (balls != rep.is_helly)
            throw InvariantViolation("all-balls Berge–Duchet disagrees with the recognition routes");
    }
    if (rep.is_helly && !(rep.is_one_helly && rep.is_clique_helly))
        throw InvariantViolation("Helly graph that is not 1-Helly or not clique-Helly");
    if (rep.is_one_helly && !rep.is_clique_helly)
        throw InvariantViolation("1-Helly graph that is not clique-Helly");
    return rep;
}

bool is_helly_graph(const Graph &g)
{
    return is_clique_helly(g) && dismantling_order(g).success();
}

namespace {

// max over a in A of d(a, B), by multi-source BFS from B
int directed_hausdorff(const Graph &g, const Bits &a, const Bits &b, std::vector<int> &dist, std::vector<int> &queue)
{
    const int n = g.n();
    std::fill(dist.begin(), dist.end(), -1);
    std::size_t head = 0, tail = 0;
    for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v)) {
        dist[v] = 0;
        queue[tail++] = static_cast<int>(v);
    }
    while (head < tail) {
        int x = queue[head++];
        for (int y : g.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue[tail++] = y;
            }
    }
    int best = 0;
    for (auto v = a.find_first(); v != Bits::npos; v = a.find_next(v))
        best = std::max(best, dist[v]);
    (void)n;
    return best;
}

} // namespace

int stable_interval_constant(const Graph &g)
{
    const int n = g.n();
    std::vector<int> dist(static_cast<std::size_t>(n)), queue(static_cast<std::size_t>(n));
    std::vector<Bits> iv(static_cast<std::size_t>(n));
    int beta = 0;
    for (int w = 0; w < n; ++w) {
        for (int v = 0; v < n; ++v)
            iv[v] = interval_bits(g, w, v);
        for (auto [v, vp] : g.edges()) {
            const Bits &a = iv[v], &b = iv[vp];
            if (a == b)
                continue;
            Bits na(static_cast<std::size_t>(n)), nb(static_cast<std::size_t>(n));
            for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x))
                na |= g.closed_nbhd(static_cast<int>(x));
            for (auto x = b.find_first(); x != Bits::npos; x = b.find_next(x))
                nb |= g.closed_nbhd(static_cast<int>(x));
            int h = 1;
            if (!a.is_subset_of(nb) || !b.is_subset_of(na))
                h = std::max(directed_hausdorff(g, a, b, dist, queue), directed_hausdorff(g, b, a, dist, queue));
            beta = std::max(beta, h);
        }
    }
    return beta;
}

bool is_median(const Graph &g)
{
    const int n = g.n();
    std::vector<Bits> iv(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            iv[static_cast<std::size_t>(u) * n + v] = iv[static_cast<std::size_t>(v) * n + u] = interval_bits(g, u, v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const Bits &uv = iv[static_cast<std::size_t>(u) * n + v];
            for (int w = v + 1; w < n; ++w) {
                Bits m = uv & iv[static_cast<std::size_t>(v) * n + w];
                m &= iv[static_cast<std::size_t>(w) * n + u];
                if (m.count() != 1)
                    return false;
            }
        }
    return true;
}

std::optional<VertexSet> dominating_clique(const Graph &g, const VertexSet &s)
{
    auto dominates = [&](const VertexSet &k) {
        for (int u : s)
            if (dist_to_set(g, u, k) > 1)
                return false;
        return true;
    };
    // supersets of a dominating clique dominate, so maximal cliques decide existence
    bool exists = false;
    for (const auto &k : maximal_cliques(g))
        if (dominates(k)) {
            exists = true;
            break;
        }
    if (!exists)
        return std::nullopt;
    Bits in_s = to_bits(s, g.n());
    std::optional<VertexSet> best;
    std::size_t best_outside = 0;
    for (const auto &k : all_cliques(adjacency_bits(g))) {
        if (best && k.size() > best->size())
            break;
        if (!dominates(k))
            continue;
        std::size_t outside = 0;
        for (int v : k)
            outside += !in_s.test(v);
        if (!best || outside < best_outside) {
            best = k;
            best_outside = outside;
        }
    }
    return best;
}

} // namespace helly
