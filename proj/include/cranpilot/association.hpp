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

#ifndef CRANPILOT_ASSOCIATION_HPP
#define CRANPILOT_ASSOCIATION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cranpilot/geometry.hpp"

namespace cranpilot {

struct Coloring;

using Index = std::uint32_t;
using IndexSet = std::vector<Index>; // sorted ascending, no duplicates

// Bipartite user <-> RRH association: U_i per RRH, B_k per user.
// Both sides are kept sorted and mutually consistent (k in U_i <=> i in B_k).
class AssociationMap {
public:
    AssociationMap(std::size_t n_user, std::vector<IndexSet> served_users, double threshold);

    std::size_t n_rrh() const noexcept { return served_.size(); }
    std::size_t n_user() const noexcept { return serving_.size(); }
    double threshold() const noexcept { return threshold_; }

    // U_i
    const IndexSet& served_users(std::size_t rrh) const { return served_.at(rrh); }
    // B_k
    const IndexSet& serving_rrhs(std::size_t user) const { return serving_.at(user); }

    bool serves(std::size_t rrh, std::size_t user) const;

    // U_i^c, materialized on request.
    IndexSet unserved_users(std::size_t rrh) const;

    const std::vector<IndexSet>& all_served() const noexcept { return served_; }

    friend bool operator==(const AssociationMap&, const AssociationMap&) = default;

private:
    std::vector<IndexSet> served_;
    std::vector<IndexSet> serving_;
    double threshold_;
};

// k in U_i exactly when dist_linf(b_i, u_k) < r.
AssociationMap sparsify(const NetworkLayout& layout, double r);

// Tops every RRH up with the l_inf-closest user of each color missing from its
// set. Ties go to the lower user index. Throws ConsistencyError if the input
// association already holds two same-colored users at one RRH.
AssociationMap refine(const AssociationMap& assoc, const NetworkLayout& layout, const Coloring& coloring);

// Every RRH serves every user in `users` (used by the globally orthogonal baseline).
AssociationMap full_association(std::size_t n_rrh, std::size_t n_user, const IndexSet& users);

} // namespace cranpilot

#endif
