// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_CONSTRUCTIONS_HPP
#define HELLY_CONSTRUCTIONS_HPP

#include "helly/common.hpp"
#include "helly/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace helly {

/// Strong product. Vertices are tuples in row-major order, the first factor most significant.
/// ResourceError past HELLY_MAX_VERTICES.
Graph strong_product(const std::vector<Graph> &gs);

/// Decodes a product vertex id into its coordinates.
std::vector<int> product_coordinates(const std::vector<Graph> &gs, int v);

/// True iff u and v lie in a common cube: I(u,v) induces a d(u,v)-cube.
bool spans_cube(const Graph &g, int u, int v);

/// Thickening of a median graph: u ~ v iff they lie in a common cube. ValidationError on a
/// non-median input; InvariantViolation if a maximal clique of the result is not a cube.
Graph thicken_median(const Graph &g);

/// u ~ v iff 1 <= d(u,v) <= delta. ValidationError when delta < 1.
Graph rips_power(const Graph &g, int delta);

struct FaceGraph {
    Graph graph;
    std::vector<VertexSet> faces; // by size, then lexicographic
};

/// Nonempty cliques, adjacent when their union is a clique. ResourceError past the clique cap.
FaceGraph face_graph(const Graph &g);

struct CliqueNerve {
    Graph graph;
    std::vector<VertexSet> cliques; // maximal cliques, lexicographic
};

/// Maximal cliques, adjacent when they intersect.
CliqueNerve nerve_graph_of_cliques(const Graph &g);

/// One coordinate per factor: nullopt is Full, a value is Fixed(vertex).
using Piece = std::vector<std::optional<int>>;

struct SgpDescription {
    std::vector<Graph> factors;
    std::vector<Piece> pieces;
    /// ValidationError on wrong arity, bad vertex ids or repeated pieces.
    void validate() const;
};

struct SgpGraph {
    Graph graph;
    std::vector<std::vector<int>> tuples; // lexicographic
    std::vector<VertexSet> piece_vertices;
};

/// Agreement criterion on every factor.
bool pieces_agree(const SgpDescription &desc, int i, int j);

/// Union of the pieces. Pairwise intersections are decided by agreement and checked against the
/// vertex sets. ValidationError when the union is disconnected; ResourceError past the
/// vertex cap.
SgpGraph sgp_build(const SgpDescription &desc);

struct ThreePieceReport {
    bool holds = true;
    std::array<int, 3> witness{-1, -1, -1};    // pairwise intersecting pieces without a G4
    std::optional<VertexSet> uncovered_clique; // a clique of the union lying in no piece
};

ThreePieceReport sgp_three_piece_report(const SgpDescription &desc);
bool sgp_three_piece(const SgpDescription &desc);

/// Maximal cliques of the union that lie in no piece.
std::vector<VertexSet> cliques_outside_pieces(const SgpDescription &desc, const SgpGraph &sg);

struct GspDescription {
    std::vector<Graph> factors;
    Graph nerve;
    std::vector<VertexSet> labels;             // factor indices per nerve vertex
    std::vector<std::vector<int>> realization; // p_v(j), -1 exactly on labels[v]
    /// ValidationError naming the first failing axiom among A1-A4.
    void validate() const;
};

/// Pieces G_v: Full on labels[v], Fixed(p_v) elsewhere.
SgpDescription gsp_realization(const GspDescription &desc);

/// Intersection graph of the pieces with Full-factor labels. ValidationError when it is
/// disconnected.
GspDescription gsp_of_sgp(const SgpDescription &desc);

/// Every triangle of the nerve has a vertex y in the closed common neighbourhood whose label
/// contains the pairwise label intersections. `witness` gets the failing triangle. Throws
/// InvariantViolation when the answer differs from the 3-piece test of the realization.
bool gsp_product_gilmore(const GspDescription &desc, std::array<int, 3> *witness = nullptr);

/// Coordinates of a median graph in K2 factors, one per edge class, with the maximal
/// cubes as pieces. `to_sgp` maps graph vertices to SGP vertices.
struct MedianSgp {
    SgpDescription desc;
    std::vector<int> to_sgp;
};
MedianSgp median_graph_sgp(const Graph &g);

struct Gluing {
    int part_a = 0, vertex_a = 0;
    int part_b = 0, vertex_b = 0;
};

struct GlueResult {
    Graph graph;
    std::vector<std::vector<int>> map; // map[part][vertex]
};

/// Wedge sums along single vertices. The pattern (parts as nodes, gluings as edges) must be
/// a tree; gluing two vertices between the same parts forms a cycle and is rejected.
GlueResult glue_at_vertices(const std::vector<Graph> &parts, const std::vector<Gluing> &gluings);

} // namespace helly

#endif
