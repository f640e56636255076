// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#include "helly/geometry.hpp"

#include "helly/constructions.hpp"
#include "helly/hull.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace helly {

namespace {

int four_point(const Graph &g, int a, int b, int c, int d)
{
    int s[3] = {g.dist(a, b) + g.dist(c, d), g.dist(a, c) + g.dist(b, d), g.dist(a, d) + g.dist(b, c)};
    std::sort(s, s + 3);
    return s[2] - s[1];
}

Graph from_edges(int n, std::vector<Edge> edges)
{
    return Graph(n, edges);
}

} // namespace

HyperbolicityResult hyperbolicity(const Graph &g, int exhaustive_limit, std::uint64_t seed, long samples)
{
    HyperbolicityResult res;
    const int n = g.n();
    if (n < 4)
        return res;
    if (n <= exhaustive_limit) {
        res.two_delta = -1;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        const int v = four_point(g, a, b, c, d);
                        if (v > res.two_delta) {
                            res.two_delta = v;
                            res.witness = {a, b, c, d};
                        }
                    }
        return res;
    }
    res.exhaustive = false;
    res.two_delta = -1;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long s = 0; s < samples; ++s) {
        std::array<int, 4> q{pick(rng), pick(rng), pick(rng), pick(rng)};
        std::sort(q.begin(), q.end());
        if (q[0] == q[1] || q[1] == q[2] || q[2] == q[3])
            continue;
        const int v = four_point(g, q[0], q[1], q[2], q[3]);
        if (v > res.two_delta || (v == res.two_delta && q < res.witness)) {
            res.two_delta = v;
            res.witness = q;
        }
    }
    if (res.two_delta < 0)
        res.two_delta = 0;
    return res;
}

namespace gen {

Graph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

Graph cycle(int n)
{
    if (n < 3)
        throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return from_edges(n, e);
}

Graph complete(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return from_edges(n, e);
}

Graph star(int leaves)
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return from_edges(a + b, e);
}

Graph wheel(int rim)
{
    if (rim < 3)
        throw ValidationError("wheel needs a rim of at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 1; i <= rim; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(std::min(i, i % rim + 1), std::max(i, i % rim + 1));
    }
    return from_edges(rim + 1, e);
}

Graph fan(int k)
{
    std::vector<Edge> e;
    for (int i = 1; i <= k + 1; ++i) {
        e.emplace_back(0, i);
        if (i <= k)
            e.emplace_back(i, i + 1);
    }
    return from_edges(k + 2, e);
}

Graph sun3()
{
    return from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
}

Graph house()
{
    return from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {3, 4}});
}

Graph bowtie()
{
    return from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph k4_minus()
{
    return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

Graph k33_minus()
{
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            if (!(i == 2 && j == 5))
                e.emplace_back(i, j);
    return from_edges(6, e);
}

Graph octahedron()
{
    std::vector<Edge> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j != (i ^ 1))
                e.emplace_back(i, j);
    return from_edges(6, e);
}

Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        e.emplace_back(i, i + 5);
        const int a = i + 5, b = (i + 2) % 5 + 5;
        e.emplace_back(std::min(a, b), std::max(a, b));
    }
    return from_edges(10, e);
}

Graph hypercube(int k)
{
    if (k < 0 || k > 13)
        throw ValidationError("hypercube dimension out of range");
    const int n = 1 << k;
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < k; ++b)
            if (!(v >> b & 1))
                e.emplace_back(v, v | 1 << b);
    return from_edges(n, e);
}

Graph grid(int m, int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (i + 1 < m)
                e.emplace_back(i * n + j, (i + 1) * n + j);
            if (j + 1 < n)
                e.emplace_back(i * n + j, i * n + j + 1);
        }
    return from_edges(m * n, e);
}

Graph king(int m, int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int di = 0; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj <= 0)
                        continue;
                    const int a = i + di, b = j + dj;
                    if (a < m && b >= 0 && b < n)
                        e.emplace_back(i * n + j, a * n + b);
                }
    return from_edges(m * n, e);
}

Graph diagonal_grid(int k)
{
    std::vector<std::array<int, 2>> pts;
    for (int i = -2 * k; i <= 2 * k; ++i)
        for (int j = -2 * k; j <= 2 * k; ++j)
            if (std::abs(i) + std::abs(j) <= 2 * k && (i + j) % 2 == 0)
                pts.push_back({i, j});
    std::vector<Edge> e;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (std::abs(pts[a][0] - pts[b][0]) == 1 && std::abs(pts[a][1] - pts[b][1]) == 1)
                e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return from_edges(static_cast<int>(pts.size()), e);
}

Graph binary_tree(int depth)
{
    const int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v)
        e.emplace_back((v - 1) / 2, v);
    return from_edges(n, e);
}

Graph random_tree(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v)
        e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return from_edges(n, e);
}

Graph random_connected(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<Edge> e;
    for (int v = 1; v < n; ++v) {
        const int u = perm[std::uniform_int_distribution<int>(0, v - 1)(rng)];
        e.insert(std::minmax(u, perm[v]));
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                e.insert({u, v});
    return from_edges(n, std::vector<Edge>(e.begin(), e.end()));
}

namespace {
Graph t3_from_points(const std::vector<std::array<int, 2>> &pts)
{
    std::map<std::array<int, 2>, int> id;
    for (std::size_t i = 0; i < pts.size(); ++i)
        id[pts[i]] = static_cast<int>(i);
    static const int dirs[3][2] = {{1, 0}, {0, 1}, {1, -1}};
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (const auto &d : dirs) {
            auto it = id.find({pts[i][0] + d[0], pts[i][1] + d[1]});
            if (it != id.end())
                e.emplace_back(std::min<int>(static_cast<int>(i), it->second),
                               std::max<int>(static_cast<int>(i), it->second));
        }
    std::sort(e.begin(), e.end());
    return Graph(static_cast<int>(pts.size()), e);
}
} // namespace

Graph t3_patch(int r)
{
    std::vector<std::array<int, 2>> pts;
    for (int q = -r; q <= r; ++q)
        for (int s = -r; s <= r; ++s)
            if (std::abs(q + s) <= r)
                pts.push_back({q, s});
    return t3_from_points(pts);
}

Graph t3_triangle(int k, int margin)
{
    return t3_from_points(t3_triangle_coordinates(k, margin));
}

Graph deltoid(int k)
{
    return t3_triangle(k, 0);
}

Graph z3_box(int m)
{
    const long side = 2L * m + 1;
    if (side * side * side > static_cast<long>(limits::max_vertices()))
        throw ResourceError("z3 box exceeds HELLY_MAX_VERTICES = " + std::to_string(limits::max_vertices()));
    const int s = static_cast<int>(side);
    auto id = [s](int x, int y, int z) { return (x * s + y) * s + z; };
    std::vector<Edge> e;
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
            for (int z = 0; z < s; ++z) {
                if (x + 1 < s)
                    e.emplace_back(id(x, y, z), id(x + 1, y, z));
                if (y + 1 < s)
                    e.emplace_back(id(x, y, z), id(x, y + 1, z));
                if (z + 1 < s)
                    e.emplace_back(id(x, y, z), id(x, y, z + 1));
            }
    return from_edges(s * s * s, e);
}

Graph normal_path_figure()
{
    // t x y u u' w s v v'
    return from_edges(9, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 5},
                          {3, 4}, {3, 5}, {4, 5}, {3, 6}, {4, 6}, {5, 6}, {3, 7}, {4, 7}, {4, 8}, {5, 8}});
}

std::vector<std::string> normal_path_figure_names()
{
    return {"t", "x", "y", "u", "u'", "w", "s", "v", "v'"};
}

} // namespace gen

std::vector<std::array<int, 2>> t3_triangle_coordinates(int k, int margin)
{
    std::vector<std::array<int, 2>> pts;
    for (int q = -margin; q <= k + 2 * margin; ++q)
        for (int r = -margin; q + r <= k + margin; ++r)
            pts.push_back({q, r});
    return pts;
}

int t3_distance(std::array<int, 2> a, std::array<int, 2> b)
{
    const int dq = a[0] - b[0], dr = a[1] - b[1];
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

std::vector<NamedGraph> corpus()
{
    using namespace gen;
    std::vector<NamedGraph> c;
    auto add = [&c](std::string name, Graph g) { c.push_back({std::move(name), std::move(g)}); };
    add("path2", path(2));
    add("path5", path(5));
    add("path8", path(8));
    for (int n = 4; n <= 8; ++n)
        add("cycle" + std::to_string(n), cycle(n));
    add("complete3", complete(3));
    add("complete4", complete(4));
    add("complete6", complete(6));
    add("star5", star(5));
    add("k23", complete_bipartite(2, 3));
    add("k33", complete_bipartite(3, 3));
    add("k4_minus", k4_minus());
    add("k33_minus", k33_minus());
    add("wheel4", wheel(4));
    add("wheel5", wheel(5));
    add("wheel6", wheel(6));
    add("fan3", fan(3));
    add("sun3", sun3());
    add("house", house());
    add("bowtie", bowtie());
    add("octahedron", octahedron());
    add("petersen", petersen());
    add("q3", hypercube(3));
    add("q4", hypercube(4));
    add("grid3x3", grid(3, 3));
    add("grid4x5", grid(4, 5));
    add("grid10x10", grid(10, 10));
    add("king2x3", king(2, 3));
    add("king3x3", king(3, 3));
    add("king4x4", king(4, 4));
    add("king5x5", king(5, 5));
    add("king3x6", king(3, 6));
    add("king7x7", king(7, 7));
    add("king10x10", king(10, 10));
    add("binary_tree3", binary_tree(3));
    add("random_tree12", random_tree(12, 1));
    add("t3_patch1", t3_patch(1));
    add("t3_patch2", t3_patch(2));
    add("t3_patch3", t3_patch(3));
    add("deltoid2", deltoid(2));
    add("deltoid3", deltoid(3));
    add("diagonal_grid1", diagonal_grid(1));
    add("diagonal_grid2", diagonal_grid(2));
    add("normal_path_figure", normal_path_figure());
    add("k2_x_c5", strong_product({path(2), cycle(5)}));
    add("p3_x_p4", strong_product({path(3), path(4)}));
    return c;
}

namespace {
struct GeneratorSpec {
    int arity;
    std::function<Graph(const std::vector<int> &)> make;
};

const std::map<std::string, GeneratorSpec> &registry()
{
    using namespace gen;
    static const std::map<std::string, GeneratorSpec> r = {
        {"path", {1, [](const auto &p) { return path(p[0]); }}},
        {"cycle", {1, [](const auto &p) { return cycle(p[0]); }}},
        {"complete", {1, [](const auto &p) { return complete(p[0]); }}},
        {"star", {1, [](const auto &p) { return star(p[0]); }}},
        {"complete_bipartite", {2, [](const auto &p) { return complete_bipartite(p[0], p[1]); }}},
        {"wheel", {1, [](const auto &p) { return wheel(p[0]); }}},
        {"fan", {1, [](const auto &p) { return fan(p[0]); }}},
        {"sun3", {0, [](const auto &) { return sun3(); }}},
        {"house", {0, [](const auto &) { return house(); }}},
        {"bowtie", {0, [](const auto &) { return bowtie(); }}},
        {"k4_minus", {0, [](const auto &) { return k4_minus(); }}},
        {"k33_minus", {0, [](const auto &) { return k33_minus(); }}},
        {"octahedron", {0, [](const auto &) { return octahedron(); }}},
        {"petersen", {0, [](const auto &) { return petersen(); }}},
        {"hypercube", {1, [](const auto &p) { return hypercube(p[0]); }}},
        {"grid", {2, [](const auto &p) { return grid(p[0], p[1]); }}},
        {"l1_grid", {2, [](const auto &p) { return grid(p[0], p[1]); }}},
        {"king", {2, [](const auto &p) { return king(p[0], p[1]); }}},
        {"linf_grid", {2, [](const auto &p) { return king(p[0], p[1]); }}},
        {"diagonal_grid", {1, [](const auto &p) { return diagonal_grid(p[0]); }}},
        {"binary_tree", {1, [](const auto &p) { return binary_tree(p[0]); }}},
        {"random_tree", {2, [](const auto &p) { return random_tree(p[0], static_cast<std::uint64_t>(p[1])); }}},
        {"t3_patch", {1, [](const auto &p) { return t3_patch(p[0]); }}},
        {"deltoid", {1, [](const auto &p) { return deltoid(p[0]); }}},
        {"z3_box", {1, [](const auto &p) { return z3_box(p[0]); }}},
        {"normal_path_figure", {0, [](const auto &) { return normal_path_figure(); }}},
    };
    return r;
}
} // namespace

Graph generate(const std::string &name, const std::vector<int> &params)
{
    const auto &r = registry();
    auto it = r.find(name);
    if (it == r.end())
        throw ValidationError("unknown generator '" + name + "'");
    if (static_cast<int>(params.size()) != it->second.arity)
        throw ValidationError("generator '" + name + "' takes " + std::to_string(it->second.arity) + " parameters");
    for (int p : params)
        if (p <= 0 && name != "random_tree")
            throw ValidationError("generator parameters must be positive");
    return it->second.make(params);
}

std::vector<std::string> generator_names()
{
    std::vector<std::string> out;
    for (const auto &[k, v] : registry())
        out.push_back(k);
    return out;
}

DefectResult z3_counterexample(int n)
{
    if (n < 1)
        throw ValidationError("z3_counterexample: n must be positive");
    const int m = 4 * n;
    const Graph g = gen::z3_box(m);
    const int s = 2 * m + 1;
    auto id = [s, m](int x, int y, int z) { return ((x + m) * s + (y + m)) * s + (z + m); };
    const int a = 2 * n;
    DefectResult res;
    res.centers = {id(-a, a, -a), id(a, a, a), id(-a, -a, a), id(a, -a, -a)};
    res.radii.assign(4, 2 * n);
    res.vertices = g.n();
    res.defect = ball_excess(g, res.centers, res.radii);
    int need = 0;
    for (std::size_t i = 0; i < res.centers.size(); ++i)
        for (std::size_t j = i + 1; j < res.centers.size(); ++j)
            need = std::max(need, (g.dist(res.centers[i], res.centers[j]) + 1) / 2);
    res.pairwise_intersecting = need <= 2 * n;
    res.intersecting_radius = std::max(need, 2 * n);
    res.intersecting_defect = coarse_helly_defect(g, res.centers, std::vector<int>(4, res.intersecting_radius));
    if (res.defect < 4 * n)
        throw InvariantViolation("z3 excess " + std::to_string(res.defect) + " below 4n = " + std::to_string(4 * n));
    if (res.intersecting_defect < 2 * n)
        throw InvariantViolation("z3 defect " + std::to_string(res.intersecting_defect) +
                                 " below 2n = " + std::to_string(2 * n));
    return res;
}

DefectResult t3_counterexample(int n, std::optional<int> radius)
{
    if (n < 1)
        throw ValidationError("t3_counterexample: n must be positive");
    const int k = 6 * n;
    const auto pts = t3_triangle_coordinates(k, n);
    const Graph g = gen::t3_triangle(k, n);
    std::map<std::array<int, 2>, int> id;
    for (std::size_t i = 0; i < pts.size(); ++i)
        id[pts[i]] = static_cast<int>(i);
    const int x1 = id.at({0, 0}), x2 = id.at({k, 0}), x3 = id.at({0, k});
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (int c : {x1, x2, x3})
            if (g.dist(static_cast<int>(i), c) != t3_distance(pts[i], pts[c]))
                throw InvariantViolation("t3 generator distance differs from the axial formula");
        const bool inside = pts[i][0] >= 0 && pts[i][1] >= 0 && pts[i][0] + pts[i][1] <= k;
        const int sum =
            g.dist(static_cast<int>(i), x1) + g.dist(static_cast<int>(i), x2) + g.dist(static_cast<int>(i), x3);
        if (inside && sum != 2 * k)
            throw InvariantViolation("deltoid sum identity fails in the t3 generator");
    }
    DefectResult res;
    res.centers = {x1, x2, x3};
    res.radii.assign(3, radius.value_or(3 * n));
    res.vertices = g.n();
    res.defect = coarse_helly_defect(g, res.centers, res.radii);
    res.intersecting_radius = res.radii.front();
    res.intersecting_defect = res.defect;
    if (!radius && res.defect < n)
        throw InvariantViolation("t3 defect " + std::to_string(res.defect) + " below n = " + std::to_string(n));
    return res;
}

GridCorrespondence grid_correspondence_report(int k)
{
    if (k < 1)
        throw ValidationError("grid correspondence needs k >= 1");
    GridCorrespondence rep;
    std::vector<std::array<int, 2>> pts, filled;
    for (int i = -2 * k; i <= 2 * k; ++i)
        for (int j = -2 * k; j <= 2 * k; ++j)
            if (std::abs(i) + std::abs(j) <= 2 * k) {
                filled.push_back({i, j});
                if ((i + j) % 2 == 0)
                    pts.push_back({i, j});
            }
    const Graph h1 = gen::diagonal_grid(k);
    const HullGraph hg = hellyfication(h1);
    const Graph hull = hg.graph();
    rep.hull_vertices = hull.n();
    auto dinf = [](const std::array<int, 2> &a, const std::array<int, 2> &b) {
        return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
    };
    std::vector<int> image;
    std::set<int> seen;
    bool all_found = true;
    for (const auto &p : filled) {
        MetricForm f;
        for (const auto &x : pts)
            f.push_back(dinf(p, x));
        auto it = std::lower_bound(hg.forms.begin(), hg.forms.end(), f);
        if (it == hg.forms.end() || *it != f) {
            all_found = false;
            image.push_back(-1);
            continue;
        }
        image.push_back(static_cast<int>(it - hg.forms.begin()));
        seen.insert(image.back());
    }
    rep.hull_bijection = all_found && seen.size() == filled.size() && filled.size() == hg.forms.size();
    if (!all_found)
        return rep;
    rep.hull_isometric = true;
    for (std::size_t a = 0; a < filled.size() && rep.hull_isometric; ++a)
        for (std::size_t b = a + 1; b < filled.size(); ++b)
            if (hull.dist(image[a], image[b]) != dinf(filled[a], filled[b])) {
                rep.hull_isometric = false;
                break;
            }
    std::map<std::array<int, 2>, int> where;
    for (std::size_t a = 0; a < filled.size(); ++a)
        where[filled[a]] = image[a];
    const int side = 2 * k + 1;
    std::vector<int> square;
    for (int a = 0; a < side; ++a)
        for (int b = 0; b < side; ++b)
            square.push_back(where.at({a - k, b - k}));
    rep.linf_grid_found = is_isometric_embedding(gen::king(side, side), hull, square);

    // Rotated l1 grid inside [-k,k]^2: (a,b) -> (a+b-k, a-b).
    const Graph h2 = gen::king(side, side);
    std::vector<int> rot;
    std::set<std::array<int, 2>> rot_pts;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
            const int i = a + b - k, j = a - b;
            rot.push_back((i + k) * side + (j + k));
            rot_pts.insert({i, j});
        }
    std::set<std::array<int, 2>> target;
    for (int i = -k; i <= k; ++i)
        for (int j = -k; j <= k; ++j)
            if (std::abs(i) + std::abs(j) <= k && ((i + j - k) % 2 + 2) % 2 == 0)
                target.insert({i, j});
    rep.l1_grid_found = rot_pts == target && is_isometric_embedding(gen::grid(k + 1, k + 1), h2, rot);
    return rep;
}

bool l1_linf_grid_correspondence(int k)
{
    return grid_correspondence_report(k).ok();
}

std::optional<std::vector<int>> find_isometric_embedding(const Graph &pattern, const Graph &host, long node_limit)
{
    const int np = pattern.n();
    if (np > host.n())
        return std::nullopt;
    // BFS order keeps every new vertex adjacent to an earlier one.
    std::vector<int> order{0}, seen(static_cast<std::size_t>(np), 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : pattern.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
    std::vector<int> img(static_cast<std::size_t>(np), -1);
    long nodes = 0;
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == np)
            return true;
        if (++nodes > node_limit)
            throw ResourceError("isometric embedding search exceeded the node limit");
        const int p = order[depth];
        for (int h = 0; h < host.n(); ++h) {
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                const int q = order[i];
                ok = host.dist(h, img[q]) == pattern.dist(p, q);
            }
            if (!ok)
                continue;
            img[p] = h;
            if (rec(depth + 1))
                return true;
            img[p] = -1;
        }
        return false;
    };
    if (rec(0))
        return img;
    return std::nullopt;
}

} // namespace helly
