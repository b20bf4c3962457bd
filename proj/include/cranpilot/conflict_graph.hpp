// SPDX-License-Identifier: Apache-2.0
//
// cranpilot: locally orthogonal pilot design for cloud radio access networks
// Copyright (C) 2026 The cranpilot authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CRANPILOT_CONFLICT_GRAPH_HPP
#define CRANPILOT_CONFLICT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cranpilot/association.hpp"
#include "cranpilot/geometry.hpp"

namespace cranpilot {

enum class GraphKind {
    shared_rrh,   // edge iff the two users share a serving RRH
    proximity_2r, // edge iff the two users are closer than 2r in l_inf
    generic,      // built directly from an edge list
};

// Undirected simple graph over user indexes. Neighbor lists are sorted
// ascending; edge membership goes through a hash set of packed pairs.
class ConflictGraph {
public:
    using Edge = std::pair<Index, Index>;

    ConflictGraph(std::size_t vertex_count, const std::vector<Edge>& edges, GraphKind kind = GraphKind::generic);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_keys_.size(); }
    GraphKind kind() const noexcept { return kind_; }

    const IndexSet& neighbors(std::size_t v) const { return adjacency_.at(v); }
    std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
    bool has_edge(std::size_t a, std::size_t b) const;

    // All edges (k, m) with k < m, sorted lexicographically.
    std::vector<Edge> edges() const;

private:
    static std::uint64_t key(Index a, Index b) noexcept;

    std::vector<IndexSet> adjacency_;
    std::unordered_set<std::uint64_t> edge_keys_;
    GraphKind kind_;
};

// Graph G: users sharing at least one RRH are adjacent.
ConflictGraph build_G(const AssociationMap& assoc);

// Graph G_inf: users closer than 2r (l_inf, strict) are adjacent.
ConflictGraph build_G_infinity(const NetworkLayout& layout, double r);

std::size_t max_degree(const ConflictGraph& g) noexcept;

// True chromatic number by iterative deepening over the color count with
// backtracking. Refuses graphs with more than vertex_limit vertices.
int exact_chromatic_number(const ConflictGraph& g, std::size_t vertex_limit = 16);

// Same search, returning an optimal coloring (color per vertex, 0-based).
std::vector<int> exact_coloring(const ConflictGraph& g, std::size_t vertex_limit = 16);

// Every edge of `sub` is an edge of `super`.
bool is_subgraph(const ConflictGraph& sub, const ConflictGraph& super);

// One "k m" line per edge, 0-based, k < m, sorted.
void write_edge_list(std::ostream& out, const ConflictGraph& g);
ConflictGraph read_edge_list(std::istream& in, std::size_t vertex_count);

} // namespace cranpilot

#endif
