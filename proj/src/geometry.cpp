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

#include "cranpilot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cranpilot/error.hpp"
#include "cranpilot/rng.hpp"

namespace cranpilot {

double dist_linf(const Point& a, const Point& b) noexcept
{
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

double dist_l2(const Point& a, const Point& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

void check_inside(const std::vector<Point>& points, double side, const char* what)
{
    for (const auto& p : points) {
        if (!(p.x >= 0.0 && p.x <= side && p.y >= 0.0 && p.y <= side))
            throw ParameterError(std::string(what) + " position outside the service square");
    }
}

} // namespace

NetworkLayout::NetworkLayout(double side, std::vector<Point> rrhs, std::vector<Point> users, std::uint64_t seed)
    : side_(side), rrhs_(std::move(rrhs)), users_(std::move(users)), seed_(seed)
{
    if (!(side_ > 0.0) || !std::isfinite(side_))
        throw ParameterError("layout side length must be positive");
    if (rrhs_.empty())
        throw ParameterError("layout needs at least one RRH");
    if (users_.empty())
        throw ParameterError("layout needs at least one user");
    check_inside(rrhs_, side_, "RRH");
    check_inside(users_, side_, "user");
}

NetworkLayout generate_layout(std::size_t n_rrh, std::size_t n_user, double side, std::uint64_t seed)
{
    if (n_rrh == 0 || n_user == 0)
        throw ParameterError("generate_layout: counts must be at least 1");
    if (!(side > 0.0) || !std::isfinite(side))
        throw ParameterError("generate_layout: side must be positive");

    Rng rng(seed);
    auto draw = [&](std::size_t count) {
        std::vector<Point> out(count);
        for (auto& p : out) {
            p.x = side * rng.uniform_closed();
            p.y = side * rng.uniform_closed();
        }
        return out;
    };
    auto rrhs = draw(n_rrh);
    auto users = draw(n_user);
    return NetworkLayout(side, std::move(rrhs), std::move(users), seed);
}

double user_density(const NetworkLayout& layout) noexcept
{
    return static_cast<double>(layout.n_user()) / (layout.side() * layout.side());
}

} // namespace cranpilot
