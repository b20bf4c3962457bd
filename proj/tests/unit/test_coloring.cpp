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

#include <set>
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

bool contiguous(const Coloring& c)
{
    std::set<int> used(c.color_of.begin(), c.color_of.end());
    return static_cast<int>(used.size()) == c.num_colors &&
           (used.empty() || (*used.begin() == 0 && *used.rbegin() == c.num_colors - 1));
}

} // namespace

TEST_CASE("dsatur examples")
{
    CHECK(dsatur(triangle()).num_colors == 3);
    CHECK(dsatur(ConflictGraph(5, {})).num_colors == 1);
    const ConflictGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(dsatur(c5).num_colors == 3);
    CHECK(dsatur(c5).num_colors == exact_chromatic_number(c5));
    CHECK(dsatur(ConflictGraph(0, {})).num_colors == 0);
}

TEST_CASE("dsatur selection order on a small graph")
{
    // Star centered at 2 plus edge (3, 4). Vertex 2 has the largest degree
    // and is colored first with 0; the leaves follow by saturation, then
    // degree, then index.
    const ConflictGraph g(5, {{2, 0}, {2, 1}, {2, 3}, {2, 4}, {3, 4}});
    const auto c = dsatur(g);
    CHECK(c.color_of == std::vector<int>{1, 1, 0, 1, 2});
    CHECK(c.num_colors == 3);
}

TEST_CASE("validate_coloring examples")
{
    CHECK(validate_coloring(triangle(), make_coloring({0, 1, 2})));
    CHECK_FALSE(validate_coloring(triangle(), make_coloring({0, 0, 1})));
    CHECK(validate_coloring(ConflictGraph(4, {}), make_coloring({0, 0, 0, 0})));
    CHECK_THROWS_AS(validate_coloring(triangle(), make_coloring({0, 1})), ConsistencyError);
}

TEST_CASE("make_coloring renumbers by first use")
{
    const auto c = make_coloring({5, 2, 5, 9});
    CHECK(c.color_of == std::vector<int>{0, 1, 0, 2});
    CHECK(c.num_colors == 3);
}

TEST_CASE("dsatur on random geometric graphs: valid, contiguous, degree bound, deterministic")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto layout = generate_layout(30, 150, 100.0, seed);
        const auto g = build_G(sparsify(layout, 10.0));
        const auto c = dsatur(g);
        REQUIRE(validate_coloring(g, c));
        REQUIRE(contiguous(c));
        REQUIRE(static_cast<std::size_t>(c.num_colors) <= max_degree(g) + 1);
        REQUIRE(dsatur(g) == c);
        const auto ginf = build_G_infinity(layout, 10.0);
        const auto cinf = dsatur(ginf);
        REQUIRE(validate_coloring(ginf, cinf));
        REQUIRE(static_cast<std::size_t>(cinf.num_colors) <= max_degree(ginf) + 1);
    }
}

TEST_CASE("dsatur is never better than exact and is exact on bipartite graphs")
{
    Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + rng.below(15);
        std::vector<ConflictGraph::Edge> general, bipartite;
        for (Index a = 0; a < n; ++a)
            for (Index b = a + 1; b < n; ++b) {
                if (rng.uniform() < 0.35)
                    general.push_back({a, b});
                // Parts are even and odd indexes.
                if ((a + b) % 2 == 1 && rng.uniform() < 0.5)
                    bipartite.push_back({a, b});
            }
        const ConflictGraph g(n, general), h(n, bipartite);
        REQUIRE(dsatur(g).num_colors >= exact_chromatic_number(g));
        REQUIRE(dsatur(h).num_colors == exact_chromatic_number(h));
    }
}

TEST_CASE("coloring round trip")
{
    const auto c = dsatur(build_G(sparsify(generate_layout(5, 25, 30.0, 4), 6.0)));
    std::stringstream ss;
    write_coloring(ss, c);
    CHECK(read_coloring(ss) == c);
}
