// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_SYMMETRY_HPP
#define HELLY_SYMMETRY_HPP

#include "helly/common.hpp"
#include "helly/graph.hpp"
#include "helly/hull.hpp"

#include <optional>
#include <vector>

namespace helly {

using Permutation = std::vector<int>;

struct GroupAction {
    std::vector<Permutation> perms; // generators

    /// ValidationError when a generator is not a permutation of g's vertices or misses an
    /// edge; the message names the edge.
    void validate(const Graph &g) const;
};

Permutation compose(const Permutation &a, const Permutation &b); // a after b
Permutation inverse(const Permutation &p);
Permutation identity_permutation(int n);

/// All group elements, sorted lexicographically (identity first). ResourceError past
/// HELLY_MAX_GROUP elements.
std::vector<Permutation> close_group(const Graph &g, const GroupAction &a);

/// Orbits of the generated group, each sorted, ordered by smallest element.
std::vector<VertexSet> orbits(const Graph &g, const GroupAction &a);

bool is_invariant(const VertexSet &s, const std::vector<Permutation> &group);

/// Smallest invariant clique (size, then lexicographic). DomainError on a non-Helly graph;
/// InvariantViolation when no invariant clique exists.
VertexSet fixed_clique(const Graph &g, const GroupAction &a);

/// Same search without the Helly requirement; nullopt when no invariant clique exists.
std::optional<VertexSet> find_invariant_clique(const Graph &g, const GroupAction &a);

struct HullOrbitResult {
    VertexSet orbit;               // vertices of g
    HullGraph hull;                // hull of the orbit metric
    GroupAction hull_action;       // induced action on hull vertices
    VertexSet clique;              // invariant clique of hull vertices
    std::vector<MetricForm> forms; // forms of the clique
};

/// Invariant clique in the hull of the orbit of v. The action on forms is f -> f o g^{-1}
/// and is checked to preserve extremality. ResourceError past the hull cap.
HullOrbitResult hull_orbit_fixed_clique(const Graph &g, const GroupAction &a, int v);

struct FixedFaceResult {
    std::vector<VertexSet> faces; // invariant faces, by size then lexicographic
    EdgeList edges;               // induced subgraph of the face graph
    std::optional<Graph> graph;   // set when nonempty and connected
};

/// Subgraph of the face graph induced by setwise invariant cliques. Throws InvariantViolation
/// when g is clique-Helly (resp. Helly) and a connected result is not.
FixedFaceResult fixed_face_subgraph(const Graph &g, const GroupAction &a);

} // namespace helly

#endif
