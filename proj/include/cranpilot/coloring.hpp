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

#ifndef CRANPILOT_COLORING_HPP
#define CRANPILOT_COLORING_HPP

#include <iosfwd>
#include <vector>

#include "cranpilot/conflict_graph.hpp"

namespace cranpilot {

// color_of[k] in {0, ..., num_colors - 1}; every color in that range is used.
struct Coloring {
    std::vector<int> color_of;
    int num_colors = 0;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// DSATUR: repeatedly color the uncolored vertex with the most distinctly
// colored neighbors, ties by larger degree, then by lower index. Each vertex
// takes the smallest color absent from its neighborhood.
Coloring dsatur(const ConflictGraph& g);

// Throws ConsistencyError when c does not cover exactly g's vertices.
bool validate_coloring(const ConflictGraph& g, const Coloring& c);

// Wraps a raw color vector, renumbering colors to be contiguous in order of first use.
Coloring make_coloring(const std::vector<int>& colors);

// "user_index color" per line.
void write_coloring(std::ostream& out, const Coloring& c);
Coloring read_coloring(std::istream& in);

} // namespace cranpilot

#endif
