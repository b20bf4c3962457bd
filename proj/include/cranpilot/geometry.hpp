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

#ifndef CRANPILOT_GEOMETRY_HPP
#define CRANPILOT_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cranpilot {

struct Point {
    double x = 0.0; // meters
    double y = 0.0; // meters

    friend bool operator==(const Point&, const Point&) = default;
};

// Chebyshev distance max(|dx|, |dy|), the metric used for channel sparsification.
double dist_linf(const Point& a, const Point& b) noexcept;

// Ordinary Euclidean distance, used for pathloss.
double dist_l2(const Point& a, const Point& b) noexcept;

// RRH and user positions on the closed square [0, side]^2. Immutable once built.
class NetworkLayout {
public:
    NetworkLayout(double side, std::vector<Point> rrhs, std::vector<Point> users, std::uint64_t seed = 0);

    double side() const noexcept { return side_; }
    std::size_t n_rrh() const noexcept { return rrhs_.size(); }
    std::size_t n_user() const noexcept { return users_.size(); }
    const std::vector<Point>& rrhs() const noexcept { return rrhs_; }
    const std::vector<Point>& users() const noexcept { return users_; }
    const Point& rrh(std::size_t i) const { return rrhs_.at(i); }
    const Point& user(std::size_t k) const { return users_.at(k); }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    double side_;
    std::vector<Point> rrhs_;
    std::vector<Point> users_;
    std::uint64_t seed_;
};

// i.i.d. uniform placement; RRHs are drawn first, then users, from one stream.
NetworkLayout generate_layout(std::size_t n_rrh, std::size_t n_user, double side, std::uint64_t seed);

// K / side^2.
double user_density(const NetworkLayout& layout) noexcept;

} // namespace cranpilot

#endif
