// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_GRAPH_HPP
#define HELLY_GRAPH_HPP

#include "helly/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace helly {

using Edge = std::pair<int, int>;

/// Raw edge list; may describe a disconnected graph.
struct EdgeList {
    int n = 0;
    std::vector<Edge> edges;
};

/// Finite, simple, connected, undirected graph with cached all-pairs distances.
class Graph {
  public:
    Graph() = default;

    /// Throws ValidationError on loops, parallel edges, bad ids or disconnection.
    Graph(int n, const std::vector<Edge> &edges);
    explicit Graph(const EdgeList &el) : Graph(el.n, el.edges) {}

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }
    const std::vector<int> &neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int dist(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool adjacent(int u, int v) const { return u != v && dist(u, v) == 1; }
    int eccentricity(int v) const { return ecc_[v]; }
    int diameter() const noexcept { return diam_; }

    /// Closed neighbourhood N[v] as a bitset.
    const Bits &closed_nbhd(int v) const { return nbhd_[v]; }

    /// Sorted edge list with u < v.
    std::vector<Edge> edges() const;

    bool operator==(const Graph &o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    int n_ = 0;
    std::size_t m_ = 0;
    int diam_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint16_t> d_;
    std::vector<int> ecc_;
    std::vector<Bits> nbhd_;
};

/// True iff the edge list is connected (n >= 1).
bool is_connected(const EdgeList &el);

/// Distance matrix as nested vectors (row-major copy of the cache).
std::vector<std::vector<int>> distances(const Graph &g);

/// I(u,v): all vertices on shortest (u,v)-paths.
VertexSet interval(const Graph &g, int u, int v);
Bits interval_bits(const Graph &g, int u, int v);

/// B_r(A): vertices at distance at most r from the set A.
VertexSet ball(const Graph &g, const VertexSet &center, int r);
/// B*_r(S): intersection of the balls B_r(s), s in S.
VertexSet ball_star(const Graph &g, const VertexSet &s, int r);
Bits ball_star_bits(const Graph &g, const VertexSet &s, int r);

struct GateResult {
    bool gated = false;
    std::vector<int> gate; // gate[x] for every vertex; -1 when undefined
    int failing_vertex = -1;
};
GateResult is_gated(const Graph &g, const VertexSet &h);

bool is_convex(const Graph &g, const VertexSet &s);

struct WeakModularityReport {
    bool tc_holds = true;
    bool qc_holds = true;
    std::vector<int> tc_witness; // u, v, w
    std::vector<int> qc_witness; // u, z, v, w
    bool weakly_modular() const { return tc_holds && qc_holds; }
};
WeakModularityReport weak_modularity(const Graph &g);

/// Single-condition pseudo-modularity test; `witness` receives (u, v, w) on failure.
bool is_pseudo_modular(const Graph &g, std::vector<int> *witness = nullptr);

struct MetricTriangle {
    int v1 = 0, v2 = 0, v3 = 0;
    int size = 0; // largest side; equals every side when equilateral
    bool equilateral = true;
};

/// Greedy quasi-median; each "maximal distance" choice takes the smallest id.
MetricTriangle quasi_median(const Graph &g, int x, int y, int z);

/// True iff v1 v2 v3 is a metric triangle.
bool is_metric_triangle(const Graph &g, int v1, int v2, int v3);

/// True iff d_h(map[u], map[v]) == d_g(u, v) for all u, v.
bool is_isometric_embedding(const Graph &g, const Graph &h, const std::vector<int> &map);

/// Induced subgraph on `vs` (in the given order); throws when disconnected.
Graph induced_subgraph(const Graph &g, const VertexSet &vs);
EdgeList induced_edges(const Graph &g, const VertexSet &vs);

/// Distance from v to the nearest vertex of s.
int dist_to_set(const Graph &g, int v, const VertexSet &s);

/// min and max distance between two vertex sets.
int set_distance(const Graph &g, const VertexSet &a, const VertexSet &b);
int set_distance_max(const Graph &g, const VertexSet &a, const VertexSet &b);

bool is_clique(const Graph &g, const VertexSet &s);

} // namespace helly

#endif
