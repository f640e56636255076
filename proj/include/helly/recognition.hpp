// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_RECOGNITION_HPP
#define HELLY_RECOGNITION_HPP

#include "helly/common.hpp"
#include "helly/graph.hpp"
#include "helly/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace helly {

/// Maximal cliques of g (sorted). Throws ResourceError past HELLY_MAX_CLIQUES.
std::vector<VertexSet> maximal_cliques(const Graph &g);

/// Clique hypergraph X(g).
Hypergraph clique_hypergraph(const Graph &g);

/// Family of all balls B_r(v), 0 <= r <= ecc(v), in (v, r) order.
Hypergraph ball_hypergraph(const Graph &g);
/// Family of unit balls B_1(v).
Hypergraph unit_ball_hypergraph(const Graph &g);

/// Triangle criterion on extended triangles.
bool is_clique_helly(const Graph &g, std::array<int, 3> *witness = nullptr);

/// Berge–Duchet on the unit balls.
bool is_one_helly(const Graph &g, std::array<int, 3> *witness = nullptr);

/// Berge–Duchet on all balls; a triple's family is intersected through median radii.
bool is_ball_helly(const Graph &g, std::array<int, 3> *witness = nullptr);

/// Exponential subfamily oracle over all balls; n <= 10 only.
bool ball_helly_oracle(const Graph &g);

enum class DismantlingStatus { Dismantled, Stuck, GreedyStuck };

struct DismantlingOrder {
    DismantlingStatus status = DismantlingStatus::Dismantled;
    std::vector<int> order;     // eliminated vertices, last one is the survivor
    std::vector<int> dominator; // dominator[i] for order[i]; -1 for the survivor
    VertexSet stuck;            // remaining vertices when no order exists
    bool success() const { return status == DismantlingStatus::Dismantled; }
};

/// Greedy elimination of the smallest dominated vertex. A nonzero seed randomises the
/// vertex priority. When greedy gets stuck on a graph of at most 14 vertices, an exhaustive
/// search over elimination orders certifies the answer.
DismantlingOrder dismantling_order(const Graph &g, std::uint64_t seed = 0);

/// True iff every step of `d` is a valid domination in the remaining graph.
bool verify_dismantling(const Graph &g, const DismantlingOrder &d);

struct HellyReport {
    bool is_helly = false;
    bool is_clique_helly = false;
    bool is_one_helly = false;
    bool is_dismantlable = false;
    bool is_weakly_modular = false;
    bool ball_route_checked = false; // Berge–Duchet on all balls was run
    DismantlingOrder dismantling;
    std::optional<std::array<int, 3>> clique_helly_witness;
    std::optional<std::array<int, 3>> one_helly_witness;
    std::optional<std::array<int, 3>> ball_witness;
    WeakModularityReport weak_modularity;
};

/// Decides Hellyness by dismantlable ∧ clique-Helly and by weakly modular ∧ 1-Helly, plus
/// the all-balls Berge–Duchet test when n <= ball_route_limit. Disagreement throws
/// InvariantViolation.
HellyReport is_helly(const Graph &g, int ball_route_limit = 200);

/// Quick answer through the dismantling route only.
bool is_helly_graph(const Graph &g);

/// Max Hausdorff distance between I(w,v) and I(w,v') over all w and edges vv'.
int stable_interval_constant(const Graph &g);

bool is_median(const Graph &g);

/// Clique K with d(u,K) <= 1 for all u in s: smallest size first, preferring vertices of s,
/// then lexicographic. Empty optional when none exists.
std::optional<VertexSet> dominating_clique(const Graph &g, const VertexSet &s);

} // namespace helly

#endif
