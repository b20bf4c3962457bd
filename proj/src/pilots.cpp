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

#include "cranpilot/pilots.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "cranpilot/error.hpp"

namespace cranpilot {

double PilotBook::scale(std::size_t k) const
{
    return std::sqrt(static_cast<double>(training_length) * beta.at(k) * p0);
}

Eigen::MatrixXcd orthonormal_dft_rows(int n)
{
    if (n < 1)
        throw ParameterError("orthonormal_dft_rows: size must be at least 1");
    Eigen::MatrixXcd rows(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int a = 0; a < n; ++a) {
        for (int t = 0; t < n; ++t) {
            // Reduce a*t mod n first so the angle stays small and exact.
            const auto phase = static_cast<double>((static_cast<long long>(a) * t) % n);
            const double angle = -2.0 * std::numbers::pi * phase / n;
            rows(a, t) = std::polar(norm, angle);
        }
    }
    return rows;
}

std::vector<double> unit_betas(std::size_t n_user)
{
    return std::vector<double>(n_user, 1.0);
}

PilotBook build_pilot_book(const Coloring& c, const std::vector<double>& beta, double p0)
{
    if (beta.size() != c.color_of.size())
        throw ConsistencyError("build_pilot_book: beta has " + std::to_string(beta.size()) +
                               " entries for " + std::to_string(c.color_of.size()) + " users");
    if (!(p0 >= 0.0))
        throw ParameterError("build_pilot_book: pilot power must be non-negative");
    for (double b : beta)
        if (!(b >= 0.0))
            throw ParameterError("build_pilot_book: power coefficients must be non-negative");
    if (c.num_colors < 1)
        throw ParameterError("build_pilot_book: coloring uses no colors");

    PilotBook book;
    book.training_length = c.num_colors;
    book.base_rows = orthonormal_dft_rows(c.num_colors);
    book.row_of = c.color_of;
    book.beta = beta;
    book.p0 = p0;
    book.pilots.resize(static_cast<Eigen::Index>(c.color_of.size()), c.num_colors);
    for (std::size_t k = 0; k < c.color_of.size(); ++k) {
        const int row = c.color_of[k];
        if (row < 0 || row >= c.num_colors)
            throw ConsistencyError("build_pilot_book: color out of range for user " + std::to_string(k));
        book.pilots.row(static_cast<Eigen::Index>(k)) = book.scale(k) * book.base_rows.row(row);
    }
    return book;
}

bool check_local_orthogonality(const PilotBook& book, const AssociationMap& assoc, double tolerance)
{
    if (book.n_user() < assoc.n_user())
        throw ConsistencyError("check_local_orthogonality: pilot book does not cover every user");
    for (std::size_t i = 0; i < assoc.n_rrh(); ++i) {
        const auto& set = assoc.served_users(i);
        for (std::size_t a = 0; a < set.size(); ++a) {
            for (std::size_t b = a + 1; b < set.size(); ++b) {
                const std::complex<double> inner =
                    book.pilots.row(set[a]).dot(book.pilots.row(set[b]));
                if (std::abs(inner) > tolerance)
                    return false;
            }
        }
    }
    return true;
}

} // namespace cranpilot
