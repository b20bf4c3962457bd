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

#include <cmath>

#include "cranpilot/error.hpp"
#include "cranpilot/geometry.hpp"
#include "cranpilot/rng.hpp"

using namespace cranpilot;

TEST_CASE("generate_layout containment and sizes")
{
    const auto layout = generate_layout(2, 4, 100.0, 7);
    CHECK(layout.n_rrh() == 2);
    CHECK(layout.n_user() == 4);
    for (const auto* set : {&layout.rrhs(), &layout.users()})
        for (const auto& p : *set) {
            CHECK(p.x >= 0.0);
            CHECK(p.x <= 100.0);
            CHECK(p.y >= 0.0);
            CHECK(p.y <= 100.0);
        }
}

TEST_CASE("generate_layout rejects bad parameters")
{
    CHECK_THROWS_AS(generate_layout(1, 1, 0.0, 1), ParameterError);
    CHECK_THROWS_AS(generate_layout(1, 1, -5.0, 1), ParameterError);
    CHECK_THROWS_AS(generate_layout(0, 1, 10.0, 1), ParameterError);
    CHECK_THROWS_AS(generate_layout(1, 0, 10.0, 1), ParameterError);
}

TEST_CASE("layout constructor rejects points outside the square")
{
    CHECK_THROWS_AS(NetworkLayout(10.0, {{1, 1}}, {{11, 1}}), ParameterError);
    CHECK_THROWS_AS(NetworkLayout(10.0, {{-0.1, 1}}, {{1, 1}}), ParameterError);
    CHECK_NOTHROW(NetworkLayout(10.0, {{0, 0}}, {{10, 10}}));
}

TEST_CASE("generate_layout is deterministic in the seed")
{
    const auto a = generate_layout(5, 9, 100.0, 42);
    const auto b = generate_layout(5, 9, 100.0, 42);
    const auto c = generate_layout(5, 9, 100.0, 43);
    CHECK(a.rrhs() == b.rrhs());
    CHECK(a.users() == b.users());
    CHECK(a.users() != c.users());
    CHECK(a.seed() == 42);
}

TEST_CASE("dist_linf examples")
{
    CHECK(dist_linf({0, 0}, {3, 4}) == 4.0);
    CHECK(dist_linf({5, 5}, {5, 5}) == 0.0);
    CHECK(dist_linf({1, 9}, {7, 2}) == 7.0);
    CHECK(dist_l2({0, 0}, {3, 4}) == doctest::Approx(5.0));
}

TEST_CASE("dist_linf is a metric on random triples")
{
    Rng rng(5);
    auto draw = [&] { return Point{200.0 * rng.uniform() - 100.0, 200.0 * rng.uniform() - 100.0}; };
    for (int i = 0; i < 10000; ++i) {
        const auto a = draw(), b = draw(), c = draw();
        REQUIRE(dist_linf(a, b) == dist_linf(b, a));
        REQUIRE(dist_linf(a, a) == 0.0);
        REQUIRE(dist_linf(a, b) > 0.0);
        REQUIRE(dist_linf(a, c) <= dist_linf(a, b) + dist_linf(b, c) + 1e-12);
    }
}

TEST_CASE("user_density examples")
{
    CHECK(user_density(generate_layout(1, 1000, 100.0, 1)) == doctest::Approx(0.1));
    CHECK(user_density(generate_layout(1, 1, 1.0, 1)) == doctest::Approx(1.0));
    CHECK(user_density(generate_layout(1, 600, 100.0, 1)) == doctest::Approx(0.06));
}

TEST_CASE("containment over many layouts and uniformity of x")
{
    double sum = 0.0;
    std::size_t count = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const auto layout = generate_layout(2, 3, 50.0, seed);
        for (const auto* set : {&layout.rrhs(), &layout.users()})
            for (const auto& p : *set) {
                REQUIRE(p.x >= 0.0);
                REQUIRE(p.x <= 50.0);
                REQUIRE(p.y >= 0.0);
                REQUIRE(p.y <= 50.0);
                sum += p.x;
                ++count;
            }
    }
    const double se = 50.0 / std::sqrt(12.0 * static_cast<double>(count));
    CHECK(std::abs(sum / static_cast<double>(count) - 25.0) < 3.0 * se);
}
