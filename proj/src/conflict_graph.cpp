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

#include "cranpilot/conflict_graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cranpilot/error.hpp"

namespace cranpilot {

std::uint64_t ConflictGraph::key(Index a, Index b) noexcept
{
    if (a > b)
        std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

ConflictGraph::ConflictGraph(std::size_t vertex_count, const std::vector<Edge>& edges, GraphKind kind)
    : adjacency_(vertex_count), kind_(kind)
{
    edge_keys_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count)
            throw ConsistencyError("edge endpoint out of range");
        if (a == b)
            continue; // no self-loops
        if (edge_keys_.insert(key(a, b)).second) {
            adjacency_[a].push_back(b);
            adjacency_[b].push_back(a);
        }
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());
}

bool ConflictGraph::has_edge(std::size_t a, std::size_t b) const
{
    if (a == b || a >= vertex_count() || b >= vertex_count())
        return false;
    return edge_keys_.count(key(static_cast<Index>(a), static_cast<Index>(b))) != 0;
}

std::vector<ConflictGraph::Edge> ConflictGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Index k = 0; k < adjacency_.size(); ++k) {
        for (Index m : adjacency_[k]) {
            if (k < m)
                out.emplace_back(k, m);
        }
    }
    return out;
}

ConflictGraph build_G(const AssociationMap& assoc)
{
    std::vector<ConflictGraph::Edge> edges;
    for (std::size_t i = 0; i < assoc.n_rrh(); ++i) {
        const auto& set = assoc.served_users(i);
        for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t b = a + 1; b < set.size(); ++b)
                edges.emplace_back(set[a], set[b]);
    }
    return ConflictGraph(assoc.n_user(), edges, GraphKind::shared_rrh);
}

ConflictGraph build_G_infinity(const NetworkLayout& layout, double r)
{
    if (!(r > 0.0))
        throw ParameterError("build_G_infinity: threshold r must be positive");

    const auto& users = layout.users();
    std::vector<Index> by_x(users.size());
    for (Index k = 0; k < by_x.size(); ++k)
        by_x[k] = k;
    std::sort(by_x.begin(), by_x.end(), [&](Index a, Index b) {
        return users[a].x < users[b].x || (users[a].x == users[b].x && a < b);
    });

    const double reach = 2.0 * r;
    std::vector<ConflictGraph::Edge> edges;
    for (std::size_t a = 0; a < by_x.size(); ++a) {
        const Point& p = users[by_x[a]];
        for (std::size_t b = a + 1; b < by_x.size() && users[by_x[b]].x - p.x < reach; ++b) {
            if (dist_linf(p, users[by_x[b]]) < reach)
                edges.emplace_back(by_x[a], by_x[b]);
        }
    }
    return ConflictGraph(users.size(), edges, GraphKind::proximity_2r);
}

std::size_t max_degree(const ConflictGraph& g) noexcept
{
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

namespace {

// Backtracking k-colorability test. Vertices are tried most-constrained first
// (fewest remaining colors), and a fresh color is only ever opened in one
// canonical way to cut symmetric branches.
class KColorSearch {
public:
    KColorSearch(const ConflictGraph& g, int k) : g_(g), k_(k), color_(g.vertex_count(), -1) {}

    bool run() { return assign(0, 0); }
    const std::vector<int>& colors() const { return color_; }

private:
    bool assign(std::size_t colored, int used)
    {
        const std::size_t n = g_.vertex_count();
        if (colored == n)
            return true;

        std::size_t pick = n;
        int pick_options = k_ + 1;
        std::size_t pick_degree = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color_[v] >= 0)
                continue;
            const int options = available(v, used);
            if (options < pick_options || (options == pick_options && g_.degree(v) > pick_degree)) {
                pick = v;
                pick_options = options;
                pick_degree = g_.degree(v);
            }
        }
        if (pick_options == 0)
            return false;

        const int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (!allowed(pick, c))
                continue;
            color_[pick] = c;
            if (assign(colored + 1, std::max(used, c + 1)))
                return true;
            color_[pick] = -1;
        }
        return false;
    }

    bool allowed(std::size_t v, int c) const
    {
        for (Index m : g_.neighbors(v))
            if (color_[m] == c)
                return false;
        return true;
    }

    int available(std::size_t v, int used) const
    {
        const int limit = std::min(used + 1, k_);
        int count = 0;
        for (int c = 0; c < limit; ++c)
            count += allowed(v, c) ? 1 : 0;
        return count;
    }

    const ConflictGraph& g_;
    int k_;
    std::vector<int> color_;
};

} // namespace

std::vector<int> exact_coloring(const ConflictGraph& g, std::size_t vertex_limit)
{
    if (g.vertex_count() > vertex_limit)
        throw SizeError("exact coloring refused: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds limit " + std::to_string(vertex_limit));
    if (g.vertex_count() == 0)
        return {};
    for (int k = 1;; ++k) {
        KColorSearch search(g, k);
        if (search.run())
            return search.colors();
    }
}

int exact_chromatic_number(const ConflictGraph& g, std::size_t vertex_limit)
{
    const auto colors = exact_coloring(g, vertex_limit);
    int used = 0;
    for (int c : colors)
        used = std::max(used, c + 1);
    return used;
}

bool is_subgraph(const ConflictGraph& sub, const ConflictGraph& super)
{
    if (sub.vertex_count() != super.vertex_count())
        throw ConsistencyError("is_subgraph: vertex counts differ");
    for (std::size_t v = 0; v < sub.vertex_count(); ++v) {
        for (Index m : sub.neighbors(v))
            if (v < m && !super.has_edge(v, m))
                return false;
    }
    return true;
}

void write_edge_list(std::ostream& out, const ConflictGraph& g)
{
    for (auto [k, m] : g.edges())
        out << k << ' ' << m << '\n';
}

ConflictGraph read_edge_list(std::istream& in, std::size_t vertex_count)
{
    std::vector<ConflictGraph::Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream fields(line);
        long long k = -1, m = -1;
        if (!(fields >> k >> m) || k < 0 || m < 0)
            throw ParameterError("edge list: malformed line " + std::to_string(line_no));
        edges.emplace_back(static_cast<Index>(k), static_cast<Index>(m));
    }
    return ConflictGraph(vertex_count, edges);
}

} // namespace cranpilot
