// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_GEOMETRY_HPP
#define HELLY_GEOMETRY_HPP

#include "helly/common.hpp"
#include "helly/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace helly {

struct HyperbolicityResult {
    int two_delta = 0;
    std::array<int, 4> witness{-1, -1, -1, -1}; // lexicographically least maximiser
    bool exhaustive = true;
};

/// Four-point condition, reported as 2*delta. Exhaustive up to exhaustive_limit vertices,
/// otherwise a lower bound from `samples` random quadruples.
HyperbolicityResult hyperbolicity(const Graph &g, int exhaustive_limit = 200, std::uint64_t seed = 0,
                                  long samples = 2000000);

namespace gen {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph wheel(int rim);
/// Apex joined to a path with k+1 vertices.
Graph fan(int k);
Graph sun3();
Graph house();
Graph bowtie();
Graph k4_minus();
Graph k33_minus();
Graph octahedron();
Graph petersen();
Graph hypercube(int k);
/// m x n grid with 4-neighbour (l1) adjacency, vertex (i,j) = i*n + j.
Graph grid(int m, int n);
/// m x n grid with 8-neighbour (l_inf) adjacency.
Graph king(int m, int n);
/// Points (i,j) with |i|+|j| <= 2k and i+j even, adjacent when |i-i'| = |j-j'| = 1.
Graph diagonal_grid(int k);
Graph binary_tree(int depth);
Graph random_tree(int n, std::uint64_t seed);
/// Connected G(n,p); a random spanning tree is added first.
Graph random_connected(int n, double p, std::uint64_t seed);
/// Triangular-lattice hexagon of radius r in axial coordinates.
Graph t3_patch(int r);
/// Triangular-lattice triangle {q >= -m, r >= -m, q + r <= k + m}.
Graph t3_triangle(int k, int margin = 0);
/// Triangular-lattice triangle of side k.
Graph deltoid(int k);
/// l1 box [-m, m]^3.
Graph z3_box(int m);
/// Nine-vertex Helly graph with a clique path t, {x,y}, {u,u',w}, s.
Graph normal_path_figure();
/// Vertex names of normal_path_figure in id order.
std::vector<std::string> normal_path_figure_names();
} // namespace gen

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Fixed named corpus of small graphs (all n <= 200).
std::vector<NamedGraph> corpus();

/// Named generator: e.g. ("cycle", {6}), ("king", {3, 3}), ("sun3", {}).
Graph generate(const std::string &name, const std::vector<int> &params);
std::vector<std::string> generator_names();

/// Axial id lookup for t3 graphs: coordinates of each vertex.
std::vector<std::array<int, 2>> t3_triangle_coordinates(int k, int margin = 0);
int t3_distance(std::array<int, 2> a, std::array<int, 2> b);

struct DefectResult {
    int defect = 0;
    VertexSet centers;
    std::vector<int> radii;
    int vertices = 0;
    bool pairwise_intersecting = true;
    // Smallest common radius making the balls pairwise intersect, and the defect at that radius.
    int intersecting_radius = 0;
    int intersecting_defect = 0;
};

/// Four balls of radius 2n at alternate corners of [-2n,2n]^3 inside the box [-4n,4n]^3.
/// `defect` is the ball excess at radius 2n. The corners are 8n apart, so these balls do not
/// pairwise intersect; the coarse Helly defect at the intersecting radius 4n is reported as
/// well. Throws InvariantViolation when the excess is below 4n or the defect below 2n.
DefectResult z3_counterexample(int n);

/// Three balls of radius `radius` (default 3n) at the corners of a triangle of side 6n, inside a
/// margin-n triangle. Checks the deltoid sum identity on every triangle vertex first.
/// Throws InvariantViolation when the default radius gives a defect below n.
DefectResult t3_counterexample(int n, std::optional<int> radius = std::nullopt);

struct GridCorrespondence {
    bool hull_bijection = false;  // hull forms are exactly the d_inf profiles of the filled diamond
    bool hull_isometric = false;  // hull distance equals d_inf on the filled diamond
    bool linf_grid_found = false; // [-k,k]^2 sits isometrically in the hull
    bool l1_grid_found = false;   // k x k l1 grid sits isometrically in the (2k+1)^2 king graph
    int hull_vertices = 0;
    bool ok() const { return hull_bijection && hull_isometric && linf_grid_found && l1_grid_found; }
};

GridCorrespondence grid_correspondence_report(int k);
bool l1_linf_grid_correspondence(int k);

/// Isometric embedding of `pattern` into `host` by backtracking, or nullopt.
std::optional<std::vector<int>> find_isometric_embedding(const Graph &pattern, const Graph &host,
                                                         long node_limit = 50000000);

} // namespace helly

#endif
