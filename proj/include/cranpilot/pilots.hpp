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

#ifndef CRANPILOT_PILOTS_HPP
#define CRANPILOT_PILOTS_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "cranpilot/association.hpp"
#include "cranpilot/coloring.hpp"

namespace cranpilot {

// Training sequences for every user. `pilots` holds one row x_k per user
// (K x training_length). When the book comes from a coloring, `base_rows`
// holds the orthonormal rows and `row_of[k]` names the row user k scales;
// books without that structure (random baseline) leave both empty.
struct PilotBook {
    int training_length = 0;
    Eigen::MatrixXcd base_rows;
    std::vector<int> row_of;
    Eigen::MatrixXcd pilots;
    std::vector<double> beta;
    double p0 = 1.0;

    std::size_t n_user() const noexcept { return static_cast<std::size_t>(pilots.rows()); }
    bool structured() const noexcept { return base_rows.size() > 0 && !row_of.empty(); }
    // Scale s_k with x_k = s_k * base_rows.row(row_of[k]); only for structured books.
    double scale(std::size_t k) const;
};

// Rows of the n x n unitary DFT matrix, F(a, t) = exp(-2 pi i a t / n) / sqrt(n).
Eigen::MatrixXcd orthonormal_dft_rows(int n);

// x_k = sqrt(L * beta_k * p0) * base_rows.row(c(k)) with L = c.num_colors.
PilotBook build_pilot_book(const Coloring& c, const std::vector<double>& beta, double p0);

// beta_k = 1 for every user.
std::vector<double> unit_betas(std::size_t n_user);

// Every pair of users sharing an RRH has |x_k x_m^H| <= tolerance.
bool check_local_orthogonality(const PilotBook& book, const AssociationMap& assoc, double tolerance = 1e-10);

} // namespace cranpilot

#endif
