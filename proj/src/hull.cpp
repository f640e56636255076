// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/hull.hpp"

#include "helly/recognition.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace helly {

void FiniteMetric::validate() const
{
    if (n < 1)
        throw ValidationError("metric needs at least one point");
    if (static_cast<int>(d.size()) != n)
        throw ValidationError("metric matrix has " + std::to_string(d.size()) + " rows, expected " + std::to_string(n));
    for (int x = 0; x < n; ++x)
        if (static_cast<int>(d[x].size()) != n)
            throw ValidationError("metric row " + std::to_string(x) + " has wrong length");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (d[x][y] != d[y][x])
                throw ValidationError("metric not symmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            if ((x == y) != (d[x][y] == 0) || d[x][y] < 0)
                throw ValidationError("metric entry (" + std::to_string(x) + "," + std::to_string(y) + ") invalid");
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (d[x][z] > d[x][y] + d[y][z])
                    throw ValidationError("triangle inequality fails at (" + std::to_string(x) + "," +
                                          std::to_string(y) + "," + std::to_string(z) + ")");
}

FiniteMetric metric_of(const Graph &g)
{
    FiniteMetric m;
    m.n = g.n();
    m.d = distances(g);
    return m;
}

FiniteMetric metric_of(const Graph &g, const VertexSet &points)
{
    FiniteMetric m;
    m.n = static_cast<int>(points.size());
    m.d.assign(points.size(), std::vector<int>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            m.d[i][j] = g.dist(points[i], points[j]);
    return m;
}

bool is_metric_form(const FiniteMetric &m, const MetricForm &f)
{
    if (static_cast<int>(f.size()) != m.n)
        return false;
    for (int x = 0; x < m.n; ++x) {
        if (f[x] < 0)
            return false;
        for (int y = x + 1; y < m.n; ++y)
            if (f[x] + f[y] < m(x, y))
                return false;
    }
    return true;
}

MetricForm kuratowski(const FiniteMetric &m, int x)
{
    return m.d[x];
}

int sup_distance(const MetricForm &f, const MetricForm &g)
{
    int best = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        best = std::max(best, std::abs(f[i] - g[i]));
    return best;
}

bool is_extremal(const FiniteMetric &m, const MetricForm &f)
{
    if (!is_metric_form(m, f))
        throw ValidationError("not a metric form: " + to_string(f));
    for (int x = 0; x < m.n; ++x) {
        bool tight = false;
        for (int y = 0; y < m.n && !tight; ++y)
            tight = f[x] + f[y] == m(x, y);
        if (!tight)
            return false;
    }
    return true;
}

namespace {

bool can_decrement(const FiniteMetric &m, const MetricForm &f, int x)
{
    if (f[x] == 0)
        return false;
    for (int y = 0; y < m.n; ++y)
        if (y != x && f[x] - 1 + f[y] < m(x, y))
            return false;
    return true;
}

} // namespace

bool is_pointwise_minimal(const FiniteMetric &m, const MetricForm &f)
{
    if (!is_metric_form(m, f))
        throw ValidationError("not a metric form: " + to_string(f));
    for (int x = 0; x < m.n; ++x)
        if (can_decrement(m, f, x))
            return false;
    return true;
}

MetricForm extremalize(const FiniteMetric &m, MetricForm f)
{
    if (!is_metric_form(m, f))
        throw ValidationError("not a metric form: " + to_string(f));
    for (int x = 0; x < m.n;) {
        if (can_decrement(m, f, x)) {
            --f[x];
            x = 0;
        } else {
            ++x;
        }
    }
    return f;
}

Graph HullGraph::graph() const
{
    return Graph(static_cast<int>(forms.size()), edges);
}

namespace {

// Depth-first search over offsets in {-1,0,1}^n with arc-consistency on domains.
// Every coordinate moves by at most one, so a pair constraint can only bind when its slack
// under f is at most 1, and a tightness witness y for x needs f(x)+f(y)-d(x,y) <= 2.
// Tightness support is kept as counters so removing a value costs O(#witnesses). Branching
// starts at the largest coordinates, which have the fewest tight partners.
struct NeighborSearch {
    const FiniteMetric &m;
    const MetricForm &f;
    int n = 0;
    std::vector<int> order;
    std::vector<unsigned> dom; // bit k set: value f+k-1 allowed
    std::vector<std::vector<int>> binding, witness;
    std::vector<std::array<int, 3>> support;
    std::vector<std::pair<int, unsigned>> trail;
    std::vector<int> queue;
    std::vector<char> queued;
    std::vector<MetricForm> out;

    int val(int x, int k) const { return f[x] + k - 1; }

    bool pair_ok(int x, int vx, int y, int vy) const
    {
        int dxy = m(x, y);
        return vx + vy >= dxy && vx - vy <= dxy && vy - vx <= dxy;
    }

    bool needs_support(int y, int k) const { return val(y, k) != 0; }

    // adjust the counters fed by value kz of z
    void feed(int z, int kz, int delta)
    {
        int vz = val(z, kz);
        for (int y : witness[z]) {
            int ky = m(y, z) - vz - f[y] + 1;
            if (ky >= 0 && ky <= 2)
                support[y][ky] += delta;
        }
    }

    void enqueue(int y)
    {
        if (!queued[y]) {
            queued[y] = 1;
            queue.push_back(y);
        }
    }

    bool narrow(int y, unsigned keep)
    {
        if (keep == dom[y])
            return true;
        unsigned lost = dom[y] & ~keep;
        trail.emplace_back(y, dom[y]);
        dom[y] = keep;
        for (int k = 0; k < 3; ++k)
            if (lost >> k & 1u)
                feed(y, k, -1);
        enqueue(y);
        return keep != 0;
    }

    void undo(std::size_t mark)
    {
        while (trail.size() > mark) {
            auto [y, old] = trail.back();
            trail.pop_back();
            unsigned lost = old & ~dom[y];
            for (int k = 0; k < 3; ++k)
                if (lost >> k & 1u)
                    feed(y, k, +1);
            dom[y] = old;
        }
    }

    bool propagate()
    {
        while (!queue.empty()) {
            int c = queue.back();
            queue.pop_back();
            queued[c] = 0;
            for (int y : binding[c]) {
                unsigned keep = 0;
                for (int ky = 0; ky < 3; ++ky) {
                    if (!(dom[y] >> ky & 1u))
                        continue;
                    for (int kc = 0; kc < 3; ++kc)
                        if ((dom[c] >> kc & 1u) && pair_ok(c, val(c, kc), y, val(y, ky))) {
                            keep |= 1u << ky;
                            break;
                        }
                }
                if (!narrow(y, keep))
                    return false;
            }
            for (int y : witness[c]) {
                unsigned keep = dom[y];
                for (int ky = 0; ky < 3; ++ky)
                    if ((keep >> ky & 1u) && needs_support(y, ky) && support[y][ky] == 0)
                        keep &= ~(1u << ky);
                if (!narrow(y, keep))
                    return false;
            }
        }
        return true;
    }

    void clear_queue()
    {
        for (int c : queue)
            queued[c] = 0;
        queue.clear();
    }

    bool init()
    {
        const std::size_t sz = static_cast<std::size_t>(n);
        order.resize(sz);
        dom.assign(sz, 7u);
        binding.assign(sz, {});
        witness.assign(sz, {});
        support.assign(sz, {0, 0, 0});
        queued.assign(sz, 0);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f[a] > f[b]; });
        for (int x = 0; x < n; ++x) {
            if (f[x] == 0)
                dom[x] &= ~1u;
            for (int y = 0; y < n; ++y) {
                if (y == x)
                    continue;
                int slack = f[x] + f[y] - m(x, y);
                if (slack <= 1 || m(x, y) - std::abs(f[x] - f[y]) <= 1)
                    binding[x].push_back(y);
                if (slack <= 2)
                    witness[x].push_back(y);
            }
        }
        for (int z = 0; z < n; ++z)
            for (int k = 0; k < 3; ++k)
                if (dom[z] >> k & 1u)
                    feed(z, k, +1);
        for (int x = 0; x < n; ++x) {
            unsigned keep = dom[x];
            for (int k = 0; k < 3; ++k)
                if (needs_support(x, k) && support[x][k] == 0)
                    keep &= ~(1u << k);
            if (!narrow(x, keep))
                return false;
            enqueue(x);
        }
        return propagate();
    }

    void run(int i)
    {
        while (i < n && (dom[order[i]] & (dom[order[i]] - 1)) == 0)
            ++i;
        if (i == n) {
            bool moved = false;
            MetricForm g(f);
            for (int x = 0; x < n; ++x) {
                int k = dom[x] == 1u ? 0 : dom[x] == 2u ? 1 : 2;
                g[x] += k - 1;
                moved |= k != 1;
            }
            if (moved)
                out.push_back(std::move(g));
            return;
        }
        const int x = order[i];
        const unsigned orig = dom[x];
        for (int k = 0; k < 3; ++k) {
            if (!(orig >> k & 1u))
                continue;
            const std::size_t mark = trail.size();
            if (narrow(x, 1u << k) && propagate())
                run(i + 1);
            clear_queue();
            undo(mark);
        }
    }
};

} // namespace

std::vector<MetricForm> extremal_neighbors(const FiniteMetric &m, const MetricForm &f)
{
    NeighborSearch s{m, f, m.n, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    if (s.init())
        s.run(0);
    std::sort(s.out.begin(), s.out.end());
    return s.out;
}

HullGraph hellyfication(const FiniteMetric &m)
{
    m.validate();
    const std::size_t cap = limits::max_forms();
    std::map<MetricForm, int> seen;
    std::vector<MetricForm> found;
    std::set<Edge> edges;
    std::deque<int> queue;
    auto visit = [&](const MetricForm &f) {
        auto [it, fresh] = seen.emplace(f, static_cast<int>(found.size()));
        if (fresh) {
            if (found.size() >= cap)
                throw ResourceError("hull form count exceeds cap " + std::to_string(cap));
            found.push_back(f);
            queue.push_back(it->second);
        }
        return it->second;
    };
    for (int x = 0; x < m.n; ++x)
        visit(kuratowski(m, x));
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        MetricForm f = found[i];
        for (const auto &g : extremal_neighbors(m, f)) {
            int j = visit(g);
            edges.emplace(std::min(i, j), std::max(i, j));
        }
    }
    // canonical order: sorted by form vector
    std::vector<int> rank(found.size());
    HullGraph hg;
    int r = 0;
    for (auto &[form, idx] : seen) {
        rank[idx] = r++;
        hg.forms.push_back(form);
    }
    for (auto [a, b] : edges)
        hg.edges.emplace_back(std::min(rank[a], rank[b]), std::max(rank[a], rank[b]));
    std::sort(hg.edges.begin(), hg.edges.end());
    for (int x = 0; x < m.n; ++x)
        hg.embed.push_back(rank[seen.at(kuratowski(m, x))]);
    return hg;
}

HullGraph hellyfication(const Graph &g)
{
    return hellyfication(metric_of(g));
}

std::vector<MetricForm> extremal_forms_bruteforce(const FiniteMetric &m)
{
    m.validate();
    const int n = m.n;
    std::vector<int> lo(static_cast<std::size_t>(n), 0), hi(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        hi[x] = *std::max_element(m.d[x].begin(), m.d[x].end());
    // an extremal f has f(y) = max_z d(y,z) - f(z), so the box tightens to a fixpoint
    for (bool changed = true; changed;) {
        changed = false;
        for (int y = 0; y < n; ++y) {
            int h = 0, l = 0;
            for (int z = 0; z < n; ++z)
                if (z != y) {
                    h = std::max(h, m(y, z) - lo[z]);
                    l = std::max(l, m(y, z) - hi[z]);
                }
            if (h < hi[y]) {
                hi[y] = h;
                changed = true;
            }
            if (l > lo[y]) {
                lo[y] = l;
                changed = true;
            }
        }
    }
    std::vector<MetricForm> out;
    MetricForm f(static_cast<std::size_t>(n));
    auto rec = [&](auto &&self, int i) -> void {
        if (i == n) {
            if (is_extremal(m, f))
                out.push_back(f);
            return;
        }
        for (int v = lo[i]; v <= hi[i]; ++v) {
            bool ok = true;
            for (int y = 0; y < i && ok; ++y)
                ok = v + f[y] >= m(i, y) && std::abs(v - f[y]) <= m(i, y);
            if (!ok)
                continue;
            f[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

int hull_distance_profile(const HullGraph &hg)
{
    int profile = 0;
    for (const auto &f : hg.forms) {
        int best = std::numeric_limits<int>::max();
        for (int e : hg.embed)
            best = std::min(best, sup_distance(f, hg.forms[e]));
        profile = std::max(profile, best);
    }
    return profile;
}

bool dress_distance_identity_check(const FiniteMetric &m, const HullGraph &hg)
{
    const std::size_t N = hg.forms.size();
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a; b < N; ++b) {
            const auto &f = hg.forms[a], &g = hg.forms[b];
            int rhs = std::numeric_limits<int>::min();
            for (int x = 0; x < m.n; ++x)
                for (int y = 0; y < m.n; ++y)
                    rhs = std::max(rhs, m(x, y) - sup_distance(hg.forms[hg.embed[y]], f) -
                                            sup_distance(hg.forms[hg.embed[x]], g));
            if (rhs != sup_distance(f, g))
                return false;
        }
    return true;
}

void check_hull_invariants(const FiniteMetric &m, const HullGraph &hg)
{
    for (const auto &f : hg.forms) {
        if (!is_metric_form(m, f) || !is_extremal(m, f))
            throw InvariantViolation("stored form is not extremal: " + to_string(f));
        for (int x = 0; x < m.n; ++x) {
            int ecc = *std::max_element(m.d[x].begin(), m.d[x].end());
            if (f[x] > ecc)
                throw InvariantViolation("form exceeds eccentricity bound: " + to_string(f));
            if (f[x] != sup_distance(f, hg.forms[hg.embed[x]]))
                throw InvariantViolation("f(x) differs from d_inf(f, e(x)) for " + to_string(f));
            for (int y = 0; y < m.n; ++y)
                if (f[y] > f[x] + m(x, y))
                    throw InvariantViolation("form is not 1-Lipschitz: " + to_string(f));
        }
    }
    Graph g = hg.graph();
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            if (g.dist(hg.embed[x], hg.embed[y]) != m(x, y) ||
                sup_distance(hg.forms[hg.embed[x]], hg.forms[hg.embed[y]]) != m(x, y))
                throw InvariantViolation("embedding is not isometric");
    for (auto [a, b] : hg.edges)
        if (sup_distance(hg.forms[a], hg.forms[b]) != 1)
            throw InvariantViolation("hull edge at sup-distance other than 1");
}

bool hull_is_idempotent(const HullGraph &hg)
{
    HullGraph again = hellyfication(metric_of(hg.graph()));
    if (again.forms.size() != hg.forms.size())
        return false;
    std::vector<int> e = again.embed;
    std::sort(e.begin(), e.end());
    return std::adjacent_find(e.begin(), e.end()) == e.end();
}

bool hull_is_minimal(const FiniteMetric &m, const HullGraph &hg)
{
    Graph g = hg.graph();
    std::vector<bool> is_point(hg.forms.size(), false);
    for (int e : hg.embed)
        is_point[e] = true;
    VertexSet rest;
    for (int v = 0; v < g.n(); ++v)
        if (!is_point[v])
            rest.push_back(v);
    if (rest.size() > 18)
        throw ResourceError("minimality check limited to 18 added hull vertices");
    const std::uint32_t full = (1u << rest.size()) - 1;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        VertexSet s(hg.embed.begin(), hg.embed.end());
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1u)
                s.push_back(rest[i]);
        s = normalized(s);
        EdgeList el = induced_edges(g, s);
        if (!is_connected(el))
            continue;
        Graph h(el);
        auto pos = [&](int v) { return static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin()); };
        bool iso = true;
        for (int x = 0; x < m.n && iso; ++x)
            for (int y = x + 1; y < m.n && iso; ++y)
                iso = h.dist(pos(hg.embed[x]), pos(hg.embed[y])) == m(x, y);
        if (iso && is_helly_graph(h))
            return false;
    }
    return true;
}

namespace {

void check_balls(const Graph &g, const VertexSet &centers, const std::vector<int> &radii)
{
    if (centers.size() != radii.size())
        throw ValidationError("centers and radii differ in length");
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (centers[i] < 0 || centers[i] >= g.n())
            throw ValidationError("ball centre out of range: " + std::to_string(centers[i]));
        if (radii[i] < 0)
            throw ValidationError("negative radius");
    }
}

} // namespace

int ball_excess(const Graph &g, const VertexSet &centers, const std::vector<int> &radii)
{
    check_balls(g, centers, radii);
    int best = std::numeric_limits<int>::max();
    for (int y = 0; y < g.n(); ++y) {
        int worst = 0;
        for (std::size_t i = 0; i < centers.size(); ++i)
            worst = std::max(worst, g.dist(y, centers[i]) - radii[i]);
        best = std::min(best, worst);
    }
    return centers.empty() ? 0 : best;
}

int coarse_helly_defect(const Graph &g, const VertexSet &centers, const std::vector<int> &radii)
{
    check_balls(g, centers, radii);
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (g.dist(centers[i], centers[j]) > radii[i] + radii[j])
                throw ValidationError("balls " + std::to_string(i) + " and " + std::to_string(j) + " do not intersect");
    return ball_excess(g, centers, radii);
}

BallFamilyDefect max_coarse_helly_defect(const Graph &g, int max_balls)
{
    const int n = g.n();
    std::vector<std::pair<int, int>> balls;
    for (int v = 0; v < n; ++v)
        for (int r = 0; r < g.eccentricity(v); ++r)
            balls.emplace_back(v, r);
    BallFamilyDefect best;
    std::vector<int> chosen;
    std::vector<std::vector<int>> excess(static_cast<std::size_t>(max_balls) + 1, std::vector<int>(n, 0));
    auto rec = [&](auto &&self, std::size_t start, int depth) -> void {
        if (depth > 0) {
            int defect = *std::min_element(excess[depth].begin(), excess[depth].end());
            if (defect > best.defect) {
                best.defect = defect;
                best.centers.clear();
                best.radii.clear();
                for (int b : chosen) {
                    best.centers.push_back(balls[b].first);
                    best.radii.push_back(balls[b].second);
                }
            }
        }
        if (depth == max_balls)
            return;
        for (std::size_t b = start; b < balls.size(); ++b) {
            auto [c, r] = balls[b];
            bool meets = true;
            for (int o : chosen)
                if (g.dist(c, balls[o].first) > r + balls[o].second) {
                    meets = false;
                    break;
                }
            if (!meets)
                continue;
            for (int y = 0; y < n; ++y)
                excess[depth + 1][y] = std::max(excess[depth][y], g.dist(y, c) - r);
            chosen.push_back(static_cast<int>(b));
            self(self, b + 1, depth + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace helly
