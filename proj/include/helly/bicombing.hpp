// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_BICOMBING_HPP
#define HELLY_BICOMBING_HPP

#include "helly/common.hpp"
#include "helly/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace helly {

using CliquePath = std::vector<VertexSet>;

/// k when d(s,t) = k for all s in a, t in b.
std::optional<int> uniform_distance(const Graph &g, const VertexSet &a, const VertexSet &b);

/// Imprint f_tau(sigma). DomainError when max distance < 2, PreconditionError when empty.
VertexSet imprint(const Graph &g, const VertexSet &tau, const VertexSet &sigma);

/// Backward construction sigma_i = f_tau(sigma_{i+1}). DomainError on a non-uniform pair.
CliquePath normal_clique_path(const Graph &g, const VertexSet &tau, const VertexSet &sigma);

/// Local conditions: consecutive cliques disjoint with clique union, cliques two apart at uniform
/// distance 2, and each inner clique the imprint of its successor w.r.t. its predecessor.
bool verify_normal_clique_path(const Graph &g, const CliquePath &p);

/// Local conditions d(s_{i-1}, s_{i+1}) = 2 and s_i in f_{s_{i-1}}(s_{i+1}).
bool is_normal_path(const Graph &g, const std::vector<int> &seq);

/// All normal (t,s)-paths, built backwards through s_i in f_t(s_{i+1}); ResourceError past cap.
std::vector<std::vector<int>> normal_paths(const Graph &g, int t, int s, std::size_t cap = 100000);

/// Vertices occurring at each position of some normal (t,s)-path.
std::vector<VertexSet> normal_path_positions(const Graph &g, int t, int s);

struct FellowTravelerResult {
    int clique_constant = 0;
    int path_constant = 0;
    std::array<int, 4> clique_witness{-1, -1, -1, -1}; // p, q, s, t
    std::array<int, 4> path_witness{-1, -1, -1, -1};
    long tuples = 0;
    bool exhaustive = true;
};

/// Synchronised distances along gamma_{ps}, gamma_{qt} and along normal paths over tuples with
/// d(p,q) <= 1 and d(s,t) <= 1. Exhaustive up to exhaustive_limit vertices, sampled beyond.
/// DomainError on a non-Helly graph; InvariantViolation when a constant exceeds 1 resp. 3.
FellowTravelerResult fellow_traveler_check(const Graph &g, std::uint64_t seed = 0, int exhaustive_limit = 60,
                                           long samples = 20000);

/// Normality of every length-2 vertex path agrees between g and the ball of radius 2 around its
/// middle vertex.
bool local_recognition_radius_check(const Graph &g);

struct UniquenessReport {
    bool holds = true;
    long paths = 0;            // locally verified clique-paths of length >= 2 with uniform ends
    CliquePath counterexample; // a verified path differing from the constructed one
};

/// Every locally verified clique-path of length >= 2 whose end cliques are at uniform distance
/// has that distance as its length and equals the constructed path.
UniquenessReport clique_path_uniqueness_check(const Graph &g);

} // namespace helly

#endif
