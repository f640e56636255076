// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_CLIQUES_HPP
#define HELLY_CLIQUES_HPP

#include "helly/common.hpp"
#include "helly/graph.hpp"

#include <vector>

namespace helly {

/// Open-neighbourhood bitsets of an edge list (no connectivity requirement).
std::vector<Bits> adjacency_bits(const EdgeList &el);
std::vector<Bits> adjacency_bits(const Graph &g);

/// Inclusion-maximal cliques, each sorted, list sorted lexicographically.
/// Throws ResourceError past `cap` cliques (0 = HELLY_MAX_CLIQUES).
std::vector<VertexSet> maximal_cliques(const std::vector<Bits> &adj, std::size_t cap = 0);

/// All nonempty cliques ordered by size, then lexicographically.
std::vector<VertexSet> all_cliques(const std::vector<Bits> &adj, std::size_t cap = 0);

} // namespace helly

#endif
