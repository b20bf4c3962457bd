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

#include "cranpilot/association.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cranpilot/coloring.hpp"
#include "cranpilot/error.hpp"

namespace cranpilot {

AssociationMap::AssociationMap(std::size_t n_user, std::vector<IndexSet> served_users, double threshold)
    : served_(std::move(served_users)), serving_(n_user), threshold_(threshold)
{
    for (std::size_t i = 0; i < served_.size(); ++i) {
        auto& set = served_[i];
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (Index k : set) {
            if (k >= n_user)
                throw ConsistencyError("association references user " + std::to_string(k) + " out of range");
            serving_[k].push_back(static_cast<Index>(i));
        }
    }
    // RRH indexes were appended in increasing order, so serving_ is already sorted.
}

bool AssociationMap::serves(std::size_t rrh, std::size_t user) const
{
    const auto& set = served_.at(rrh);
    return std::binary_search(set.begin(), set.end(), static_cast<Index>(user));
}

IndexSet AssociationMap::unserved_users(std::size_t rrh) const
{
    const auto& set = served_.at(rrh);
    IndexSet out;
    out.reserve(n_user() - set.size());
    auto it = set.begin();
    for (Index k = 0; k < n_user(); ++k) {
        if (it != set.end() && *it == k) {
            ++it;
            continue;
        }
        out.push_back(k);
    }
    return out;
}

AssociationMap sparsify(const NetworkLayout& layout, double r)
{
    if (!(r > 0.0))
        throw ParameterError("sparsify: threshold r must be positive");

    // Sweep over users sorted by x so each RRH only inspects the |dx| < r strip.
    const auto& users = layout.users();
    std::vector<Index> by_x(users.size());
    for (Index k = 0; k < by_x.size(); ++k)
        by_x[k] = k;
    std::sort(by_x.begin(), by_x.end(), [&](Index a, Index b) {
        return users[a].x < users[b].x || (users[a].x == users[b].x && a < b);
    });

    std::vector<IndexSet> served(layout.n_rrh());
    for (std::size_t i = 0; i < layout.n_rrh(); ++i) {
        const Point& b = layout.rrh(i);
        auto first = std::lower_bound(by_x.begin(), by_x.end(), b.x - r,
                                      [&](Index k, double x) { return users[k].x < x; });
        for (auto it = first; it != by_x.end() && users[*it].x < b.x + r; ++it) {
            if (dist_linf(b, users[*it]) < r)
                served[i].push_back(*it);
        }
    }
    return AssociationMap(layout.n_user(), std::move(served), r);
}

AssociationMap refine(const AssociationMap& assoc, const NetworkLayout& layout, const Coloring& coloring)
{
    const std::size_t n_user = assoc.n_user();
    if (coloring.color_of.size() != n_user || layout.n_user() != n_user || layout.n_rrh() != assoc.n_rrh())
        throw ConsistencyError("refine: association, layout and coloring sizes differ");

    const int n_colors = coloring.num_colors;
    std::vector<IndexSet> served = assoc.all_served();

    std::vector<char> present(static_cast<std::size_t>(n_colors));
    std::vector<double> best_dist(static_cast<std::size_t>(n_colors));
    std::vector<Index> best_user(static_cast<std::size_t>(n_colors));

    for (std::size_t i = 0; i < served.size(); ++i) {
        std::fill(present.begin(), present.end(), 0);
        for (Index k : served[i]) {
            auto& slot = present[static_cast<std::size_t>(coloring.color_of[k])];
            if (slot)
                throw ConsistencyError("refine: RRH " + std::to_string(i) +
                                       " serves two users of the same color");
            slot = 1;
        }

        std::fill(best_dist.begin(), best_dist.end(), std::numeric_limits<double>::infinity());
        std::fill(best_user.begin(), best_user.end(), std::numeric_limits<Index>::max());
        const Point& b = layout.rrh(i);
        for (Index k = 0; k < n_user; ++k) {
            const auto c = static_cast<std::size_t>(coloring.color_of[k]);
            if (present[c])
                continue;
            const double d = dist_linf(b, layout.user(k));
            // Strict '<' with ascending k keeps the lowest index on ties.
            if (d < best_dist[c]) {
                best_dist[c] = d;
                best_user[c] = k;
            }
        }
        for (std::size_t c = 0; c < present.size(); ++c) {
            if (!present[c] && best_user[c] != std::numeric_limits<Index>::max())
                served[i].push_back(best_user[c]);
        }
    }
    return AssociationMap(n_user, std::move(served), assoc.threshold());
}

AssociationMap full_association(std::size_t n_rrh, std::size_t n_user, const IndexSet& users)
{
    std::vector<IndexSet> served(n_rrh, users);
    return AssociationMap(n_user, std::move(served), std::numeric_limits<double>::infinity());
}

} // namespace cranpilot
