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

#include <doctest.h>

#include <sstream>

#include "cranpilot/association.hpp"
#include "cranpilot/coloring.hpp"
#include "cranpilot/conflict_graph.hpp"
#include "cranpilot/error.hpp"
#include "cranpilot/geometry.hpp"
#include "cranpilot/rng.hpp"

using namespace cranpilot;

namespace {

ConflictGraph triangle() { return ConflictGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
ConflictGraph cycle(std::size_t n)
{
    std::vector<ConflictGraph::Edge> e;
    for (Index v = 0; v < n; ++v)
        e.push_back({v, static_cast<Index>((v + 1) % n)});
    return ConflictGraph(n, e);
}

} // namespace

TEST_CASE("build_G examples")
{
    // Users 0, 1 share RRH 0; user 2 is unserved.
    const auto g = build_G(AssociationMap(3, {{0, 1}}, 1.0));
    CHECK(g.kind() == GraphKind::shared_rrh);
    CHECK(g.edges() == std::vector<ConflictGraph::Edge>{{0, 1}});
    CHECK(g.degree(2) == 0);

    CHECK(build_G(AssociationMap(4, {{}, {}}, 1.0)).edge_count() == 0);

    const auto chain = build_G(AssociationMap(3, {{0, 1}, {1, 2}}, 1.0));
    CHECK(chain.edges() == std::vector<ConflictGraph::Edge>{{0, 1}, {1, 2}});
    CHECK_FALSE(chain.has_edge(0, 2));
}

TEST_CASE("build_G_infinity uses a strict 2r threshold")
{
    const double r = 5.0;
    const NetworkLayout exact(100.0, {{0, 0}}, {{10, 10}, {20, 13}});
    CHECK(build_G_infinity(exact, r).edge_count() == 0);
    const NetworkLayout inside(100.0, {{0, 0}}, {{10, 10}, {19.5, 13}});
    const auto g = build_G_infinity(inside, r);
    CHECK(g.kind() == GraphKind::proximity_2r);
    CHECK(g.has_edge(0, 1));
    CHECK(build_G_infinity(NetworkLayout(10.0, {{0, 0}}, {{1, 1}}), r).edge_count() == 0);
    CHECK_THROWS_AS(build_G_infinity(exact, 0.0), ParameterError);
}

TEST_CASE("build_G_infinity matches brute force")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto layout = generate_layout(1, 80, 40.0, seed);
        const double r = 1.0 + static_cast<double>(seed % 5);
        const auto g = build_G_infinity(layout, r);
        for (std::size_t k = 0; k < 80; ++k)
            for (std::size_t m = 0; m < 80; ++m)
                REQUIRE(g.has_edge(k, m) == (k != m && dist_linf(layout.user(k), layout.user(m)) < 2.0 * r));
    }
}

TEST_CASE("graph constructor invariants")
{
    CHECK(ConflictGraph(3, {{1, 1}}).edge_count() == 0);
    CHECK_FALSE(ConflictGraph(3, {{1, 1}}).has_edge(1, 1));
    CHECK_THROWS_AS(ConflictGraph(3, {{0, 3}}), ConsistencyError);
    const ConflictGraph g(4, {{2, 0}, {0, 2}, {3, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.neighbors(0) == IndexSet{2});
    CHECK(g.edges() == std::vector<ConflictGraph::Edge>{{0, 2}, {1, 3}});
}

TEST_CASE("max_degree examples")
{
    CHECK(max_degree(triangle()) == 2);
    CHECK(max_degree(ConflictGraph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) == 5);
    CHECK(max_degree(ConflictGraph(4, {})) == 0);
}

TEST_CASE("exact_chromatic_number examples")
{
    CHECK(exact_chromatic_number(triangle()) == 3);
    CHECK(exact_chromatic_number(cycle(5)) == 3);
    CHECK(exact_chromatic_number(cycle(6)) == 2);
    CHECK(exact_chromatic_number(ConflictGraph(7, {})) == 1);
    CHECK(exact_chromatic_number(ConflictGraph(0, {})) == 0);
    CHECK_THROWS_AS(exact_chromatic_number(ConflictGraph(17, {})), SizeError);
    CHECK(exact_chromatic_number(ConflictGraph(17, {}), 20) == 1);
}

TEST_CASE("exact coloring is valid and no larger than max degree + 1")
{
    Rng rng(99);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.below(12);
        std::vector<ConflictGraph::Edge> e;
        for (Index a = 0; a < n; ++a)
            for (Index b = a + 1; b < n; ++b)
                if (rng.uniform() < 0.4)
                    e.push_back({a, b});
        const ConflictGraph g(n, e);
        const auto colors = exact_coloring(g);
        const auto c = make_coloring(colors);
        REQUIRE(validate_coloring(g, c));
        REQUIRE(c.num_colors == exact_chromatic_number(g));
        REQUIRE(static_cast<std::size_t>(c.num_colors) <= max_degree(g) + 1);
    }
}

TEST_CASE("is_subgraph examples")
{
    const auto path = ConflictGraph(3, {{0, 1}, {1, 2}});
    CHECK(is_subgraph(path, triangle()));
    CHECK_FALSE(is_subgraph(triangle(), path));
    CHECK(is_subgraph(ConflictGraph(3, {}), path));
    CHECK_THROWS_AS(is_subgraph(ConflictGraph(2, {}), path), ConsistencyError);
}

TEST_CASE("G is a subgraph of G_inf")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto layout = generate_layout(20, 40, 60.0, seed);
        const double r = 2.0 + static_cast<double>(seed % 9);
        REQUIRE(is_subgraph(build_G(sparsify(layout, r)), build_G_infinity(layout, r)));
    }
}

TEST_CASE("edge list round trip")
{
    const auto g = build_G(sparsify(generate_layout(10, 30, 40.0, 8), 7.0));
    std::stringstream ss;
    write_edge_list(ss, g);
    const auto text = ss.str();
    const auto back = read_edge_list(ss, g.vertex_count());
    CHECK(back.edges() == g.edges());
    std::stringstream again;
    write_edge_list(again, back);
    CHECK(again.str() == text);

    std::stringstream bad("0 x\n");
    CHECK_THROWS(read_edge_list(bad, 3));
}
