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

#include "cranpilot/coloring.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "cranpilot/error.hpp"

namespace cranpilot {

Coloring dsatur(const ConflictGraph& g)
{
    const std::size_t n = g.vertex_count();
    Coloring out;
    out.color_of.assign(n, -1);
    if (n == 0)
        return out;

    std::vector<int> saturation(n, 0);
    std::vector<std::vector<char>> neighbor_colors(n);

    // Ordered so that begin() is the next vertex: max saturation, max degree, min index.
    using Entry = std::tuple<int, long, Index>;
    auto entry = [&](Index v) { return Entry{-saturation[v], -static_cast<long>(g.degree(v)), v}; };
    std::set<Entry> queue;
    for (Index v = 0; v < n; ++v)
        queue.insert(entry(v));

    while (!queue.empty()) {
        const Index v = std::get<2>(*queue.begin());
        queue.erase(queue.begin());

        const auto& seen = neighbor_colors[v];
        int c = 0;
        while (c < static_cast<int>(seen.size()) && seen[static_cast<std::size_t>(c)])
            ++c;
        out.color_of[v] = c;
        out.num_colors = std::max(out.num_colors, c + 1);

        for (Index u : g.neighbors(v)) {
            if (out.color_of[u] >= 0)
                continue;
            auto& mark = neighbor_colors[u];
            if (mark.size() <= static_cast<std::size_t>(c))
                mark.resize(static_cast<std::size_t>(c) + 1, 0);
            if (mark[static_cast<std::size_t>(c)])
                continue;
            queue.erase(entry(u));
            mark[static_cast<std::size_t>(c)] = 1;
            ++saturation[u];
            queue.insert(entry(u));
        }
    }
    return out;
}

bool validate_coloring(const ConflictGraph& g, const Coloring& c)
{
    if (c.color_of.size() != g.vertex_count())
        throw ConsistencyError("validate_coloring: coloring covers " + std::to_string(c.color_of.size()) +
                               " vertices, graph has " + std::to_string(g.vertex_count()));
    for (auto [k, m] : g.edges())
        if (c.color_of[k] == c.color_of[m])
            return false;
    return true;
}

Coloring make_coloring(const std::vector<int>& colors)
{
    Coloring out;
    out.color_of.resize(colors.size());
    std::map<int, int> remap;
    for (std::size_t k = 0; k < colors.size(); ++k) {
        auto [it, inserted] = remap.emplace(colors[k], static_cast<int>(remap.size()));
        out.color_of[k] = it->second;
    }
    out.num_colors = static_cast<int>(remap.size());
    return out;
}

void write_coloring(std::ostream& out, const Coloring& c)
{
    for (std::size_t k = 0; k < c.color_of.size(); ++k)
        out << k << ' ' << c.color_of[k] << '\n';
}

Coloring read_coloring(std::istream& in)
{
    std::map<long long, int> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        long long k = -1;
        int color = -1;
        if (!(fields >> k >> color) || k < 0 || color < 0)
            throw ParameterError("coloring: malformed line '" + line + "'");
        entries[k] = color;
    }
    Coloring out;
    out.color_of.resize(entries.size());
    long long expect = 0;
    for (auto [k, color] : entries) {
        if (k != expect++)
            throw ConsistencyError("coloring: user indexes are not contiguous from 0");
        out.color_of[static_cast<std::size_t>(k)] = color;
        out.num_colors = std::max(out.num_colors, color + 1);
    }
    return out;
}

} // namespace cranpilot
