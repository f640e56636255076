// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_HYPERGRAPH_HPP
#define HELLY_HYPERGRAPH_HPP

#include "helly/common.hpp"
#include "helly/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace helly {

/// Vertex set [0,n) with a list of nonempty edges.
struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> edges;

    /// Sorts each edge and throws ValidationError on empty edges or bad ids.
    void validate_and_normalize();
    bool operator==(const Hypergraph &) const = default;
};

/// Vertices lying in no edge; they produce no dual edge.
VertexSet uncovered_vertices(const Hypergraph &h);

/// Dual: vertex i is edge i of h, the edges are S_v = {i : v in E_i} for covered v.
Hypergraph dual(const Hypergraph &h);

/// Keeps one copy of each inclusion-maximal edge, sorted lexicographically.
Hypergraph simplify(const Hypergraph &h);
bool is_simple(const Hypergraph &h);

EdgeList two_section_edges(const Hypergraph &h);
EdgeList nerve_edges(const Hypergraph &h);

/// These throw ValidationError when the result is disconnected.
Graph two_section(const Hypergraph &h);
Graph line_graph(const Hypergraph &h);
Graph nerve_graph(const Hypergraph &h);

struct TripleCertificate {
    bool holds = true;
    std::array<int, 3> witness{-1, -1, -1};
};

/// Berge–Duchet on the raw edge family: the Helly property of the family.
TripleCertificate berge_duchet(const Hypergraph &h);
bool has_helly_property(const Hypergraph &h);

/// Helly hypergraph test: Berge–Duchet after simplification.
bool is_helly(const Hypergraph &h, TripleCertificate *cert = nullptr);

/// Exponential oracle: every pairwise intersecting subfamily has a common vertex.
/// Enumerates subfamilies directly; at most 24 edges.
bool helly_oracle(const Hypergraph &h);

/// Same property through the maximal pairwise intersecting families.
bool helly_via_maximal_families(const Hypergraph &h);

/// Gilmore test; witness holds an edge triple on failure.
bool is_conformal(const Hypergraph &h, TripleCertificate *cert = nullptr);

/// Every maximal clique of the 2-section lies in an edge.
bool conformal_oracle(const Hypergraph &h);

bool is_triangle_free_hypergraph(const Hypergraph &h);

/// Edges of h followed by the maximal cliques of its 2-section not already present.
Hypergraph conformal_closure(const Hypergraph &h);

/// Adds a witness vertex to every maximal pairwise intersecting edge family with empty intersection.
Hypergraph hellyfication_hypergraph(const Hypergraph &h);

/// Abstract cell complex given by its cells; the empty set may appear as a cell.
struct CellComplex {
    std::vector<VertexSet> cells;
};

struct CellConditions {
    bool three_cell = true;
    bool gmc = true;
    bool helly3 = true;
    std::vector<int> dims; // recomputed dimension of each input cell
    std::vector<int> three_cell_witness;
    std::vector<int> gmc_witness; // C, A, B
    std::vector<int> helly3_witness;
};

/// Face-lattice dimensions; dim(empty) = -1.
std::vector<int> cell_dimensions(const CellComplex &x);

/// Throws ValidationError when cells are not closed under pairwise intersection.
CellConditions check_cell_conditions(const CellComplex &x);

/// Nonempty cells as a hypergraph on the union of their vertices.
Hypergraph cell_hypergraph(const CellComplex &x);

/// All subsets of a k-simplex / all faces of a k-cube, with the empty cell.
CellComplex simplex_complex(int k);
CellComplex cube_complex(int k);

} // namespace helly

#endif
