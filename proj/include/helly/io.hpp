// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The helly authors

#ifndef HELLY_IO_HPP
#define HELLY_IO_HPP

#include "helly/bicombing.hpp"
#include "helly/constructions.hpp"
#include "helly/graph.hpp"
#include "helly/hull.hpp"
#include "helly/hypergraph.hpp"
#include "helly/recognition.hpp"
#include "helly/symmetry.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace helly::io {

using nlohmann::json;

/// Parses a file; ValidationError on I/O or syntax errors.
json read_json_file(const std::string &path);

/// {"n": n, "edges": [[u,v],...]} with sorted edges.
json to_json(const Graph &g);
EdgeList edge_list_from_json(const json &j);
/// ValidationError on malformed input or a disconnected graph.
Graph graph_from_json(const json &j);

json to_json(const Hypergraph &h);
Hypergraph hypergraph_from_json(const json &j);

/// {"n": n, "d": [[...]]}.
FiniteMetric metric_from_json(const json &j);
bool is_metric_json(const json &j);

json to_json(const HullGraph &hg);
json to_json(const HellyReport &r);
json to_json(const CliquePath &p);
json to_json(const FellowTravelerResult &r);

/// {"perms": [[...],...]}.
GroupAction action_from_json(const json &j);

/// {"factors": [graph,...], "pieces": [[null | vertex, ...],...]}.
SgpDescription sgp_from_json(const json &j);

/// {"parts": [graph,...], "gluings": [[part_a, vertex_a, part_b, vertex_b],...]}.
std::vector<Graph> parts_from_json(const json &j);
std::vector<Gluing> gluings_from_json(const json &j);

/// Undirected DOT with optional vertex labels.
std::string to_dot(const Graph &g, const std::vector<std::string> &labels = {});

} // namespace helly::io

#endif
