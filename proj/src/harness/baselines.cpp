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

#include "cranpilot/harness/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cranpilot/error.hpp"
#include "cranpilot/rng.hpp"

namespace cranpilot::harness {

PilotBook baseline_random_pilots(int length, std::size_t n_user, const std::vector<double>& beta, double p0,
                                 std::uint64_t seed)
{
    if (length < 1)
        throw ParameterError("baseline_random_pilots: length must be at least 1");
    if (beta.size() != n_user)
        throw ConsistencyError("baseline_random_pilots: beta size differs from user count");
    if (!(p0 >= 0.0))
        throw ParameterError("baseline_random_pilots: pilot power must be non-negative");

    PilotBook book;
    book.training_length = length;
    book.beta = beta;
    book.p0 = p0;
    book.pilots.resize(static_cast<Eigen::Index>(n_user), length);

    Rng rng(seed);
    for (std::size_t k = 0; k < n_user; ++k) {
        if (!(beta[k] >= 0.0))
            throw ParameterError("baseline_random_pilots: power coefficients must be non-negative");
        auto row = book.pilots.row(static_cast<Eigen::Index>(k));
        for (int t = 0; t < length; ++t)
            row(t) = rng.complex_normal();
        const double norm = row.norm();
        const double target = std::sqrt(static_cast<double>(length) * beta[k] * p0);
        row *= norm > 0.0 ? target / norm : 0.0;
    }
    return book;
}

GlobalOrthogonalPlan baseline_global_orthogonal(int coherence, std::size_t n_user, std::uint64_t seed, double beta,
                                                double p0)
{
    if (coherence < 2 || coherence % 2 != 0)
        throw ParameterError("baseline_global_orthogonal: coherence time must be even and >= 2");
    if (n_user == 0)
        throw ParameterError("baseline_global_orthogonal: need at least one user");

    const auto half = static_cast<std::size_t>(coherence / 2);
    const std::size_t active_count = std::min(half, n_user);

    std::vector<Index> order(n_user);
    std::iota(order.begin(), order.end(), Index{0});
    Rng rng(seed);
    // Partial Fisher-Yates: the first active_count slots are a uniform subset.
    for (std::size_t j = 0; j < active_count; ++j) {
        const auto pick = j + static_cast<std::size_t>(rng.below(n_user - j));
        std::swap(order[j], order[pick]);
    }
    IndexSet active(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(active_count));
    std::sort(active.begin(), active.end());

    const int length = static_cast<int>(active_count);
    GlobalOrthogonalPlan plan;
    plan.active = active;
    auto& book = plan.book;
    book.training_length = length;
    book.base_rows = orthonormal_dft_rows(length);
    book.row_of.assign(n_user, 0);
    book.beta.assign(n_user, 0.0);
    book.p0 = p0;
    book.pilots = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n_user), length);
    for (std::size_t j = 0; j < active.size(); ++j) {
        const Index k = active[j];
        book.row_of[k] = static_cast<int>(j);
        book.beta[k] = beta;
        book.pilots.row(k) = book.scale(k) * book.base_rows.row(static_cast<Eigen::Index>(j));
    }
    return plan;
}

} // namespace cranpilot::harness
