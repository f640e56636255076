// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_HULL_HPP
#define HELLY_HULL_HPP

#include "helly/common.hpp"
#include "helly/graph.hpp"

#include <optional>
#include <vector>

namespace helly {

/// Integer metric on points 0..n-1.
struct FiniteMetric {
    int n = 0;
    std::vector<std::vector<int>> d;

    /// Throws ValidationError unless d is a square, symmetric, zero-diagonal integer metric
    /// with positive off-diagonal entries.
    void validate() const;
    int operator()(int x, int y) const { return d[x][y]; }
};

FiniteMetric metric_of(const Graph &g);
/// Restriction of the graph metric to `points` (in the given order).
FiniteMetric metric_of(const Graph &g, const VertexSet &points);

using MetricForm = std::vector<int>;

bool is_metric_form(const FiniteMetric &m, const MetricForm &f);
/// Kuratowski form e(x) = d(x, .).
MetricForm kuratowski(const FiniteMetric &m, int x);
int sup_distance(const MetricForm &f, const MetricForm &g);

/// Tight at every coordinate. Throws ValidationError when f is not a metric form.
bool is_extremal(const FiniteMetric &m, const MetricForm &f);
/// Pointwise minimality: no single coordinate can drop by one.
bool is_pointwise_minimal(const FiniteMetric &m, const MetricForm &f);

/// Decrements the smallest decreasable coordinate until none is left.
MetricForm extremalize(const FiniteMetric &m, MetricForm f);

struct HullGraph {
    std::vector<MetricForm> forms; // sorted
    std::vector<Edge> edges;       // pairs at sup-distance 1, sorted
    std::vector<int> embed;        // index of e(x) for each point x
    Graph graph() const;
};

/// Extremal forms at sup-distance one from f.
std::vector<MetricForm> extremal_neighbors(const FiniteMetric &m, const MetricForm &f);

/// Discrete injective hull, by search from the Kuratowski forms. ResourceError past
/// HELLY_MAX_FORMS forms.
HullGraph hellyfication(const FiniteMetric &m);
HullGraph hellyfication(const Graph &g);

/// All extremal forms by enumeration of a bounded box; sorted. Independent of the search.
std::vector<MetricForm> extremal_forms_bruteforce(const FiniteMetric &m);

/// max over forms f of min over points x of d_inf(f, e(x)).
int hull_distance_profile(const HullGraph &hg);

/// d_inf(f,g) = max over x,y of d(x,y) - d_inf(e(y),f) - d_inf(e(x),g) for all stored pairs.
bool dress_distance_identity_check(const FiniteMetric &m, const HullGraph &hg);

/// Structural invariants of stored forms: extremal, 1-Lipschitz, f(x) = d_inf(f, e(x)),
/// f(x) <= ecc(x), isometric embed. Throws InvariantViolation on failure.
void check_hull_invariants(const FiniteMetric &m, const HullGraph &hg);

/// The hull of the metric of hg's graph has as many forms as hg and the embed is a bijection.
bool hull_is_idempotent(const HullGraph &hg);

/// No proper vertex subset containing the embedded points induces a Helly graph into which
/// the points embed isometrically. At most 18 non-embedded hull vertices.
bool hull_is_minimal(const FiniteMetric &m, const HullGraph &hg);

/// Smallest delta such that the balls B(c_i, r_i + delta) share a vertex, with no
/// intersection requirement.
int ball_excess(const Graph &g, const VertexSet &centers, const std::vector<int> &radii);

/// Smallest delta such that the balls B(c_i, r_i + delta) share a vertex. The balls must
/// pairwise intersect; otherwise ValidationError names the pair.
int coarse_helly_defect(const Graph &g, const VertexSet &centers, const std::vector<int> &radii);

struct BallFamilyDefect {
    int defect = 0;
    VertexSet centers;
    std::vector<int> radii;
};

/// Largest defect over pairwise intersecting families of at most max_balls distinct balls
/// with radius below the eccentricity of their centre (larger balls are the whole graph).
BallFamilyDefect max_coarse_helly_defect(const Graph &g, int max_balls = 4);

} // namespace helly

#endif
