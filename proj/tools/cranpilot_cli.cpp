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

// Batch experiment runner. Every subcommand reads a key = value config,
// applies command-line overrides and writes one CSV.
//
// Exit codes: 0 success, 1 parameter or domain error, 2 infeasible training
// length, 3 I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cranpilot/association.hpp"
#include "cranpilot/coloring.hpp"
#include "cranpilot/conflict_graph.hpp"
#include "cranpilot/error.hpp"
#include "cranpilot/geometry.hpp"
#include "cranpilot/harness/config.hpp"
#include "cranpilot/harness/experiments.hpp"

namespace {

using namespace cranpilot;

struct Overrides {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> workers;
};

void add_common(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--config", o.config, "key = value configuration file")->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "CSV output path")->required();
    cmd->add_option("--seed", o.seed, "master seed override");
    cmd->add_option("--trials", o.trials, "number of Monte Carlo trials override");
    cmd->add_option("--workers", o.workers, "worker threads (results do not depend on it)");
}

int run(harness::ExperimentKind kind, const Overrides& o)
{
    harness::ExperimentConfig cfg;
    if (!o.config.empty())
        cfg = harness::load_config(o.config);
    cfg.kind = kind;
    if (o.seed)
        cfg.seed = *o.seed;
    if (o.trials)
        cfg.trials = *o.trials;
    if (o.workers)
        cfg.workers = *o.workers;
    cfg.validate();

    const auto rows = harness::run_experiment(cfg);
    harness::emit_csv(rows, o.out);
    std::cerr << harness::to_string(kind) << ": " << rows.size() << " rows -> " << o.out << " (config "
              << cfg.hash() << ")\n";
    return 0;
}

struct GraphArgs {
    std::size_t n_rrh = 0;
    std::size_t n_user = 0;
    double side = 100.0;
    double r = 10.0;
    std::uint64_t seed = 1;
    bool infinity = false;
    std::string edges;
    std::string coloring;
};

int run_graph(const GraphArgs& a)
{
    const auto layout = generate_layout(a.n_rrh, a.n_user, a.side, a.seed);
    const auto g = a.infinity ? build_G_infinity(layout, a.r) : build_G(sparsify(layout, a.r));
    const auto c = dsatur(g);
    {
        std::ofstream out(a.edges);
        if (!out)
            throw IoError("cannot open '" + a.edges + "' for writing");
        write_edge_list(out, g);
        if (!out)
            throw IoError("failed writing '" + a.edges + "'");
    }
    if (!a.coloring.empty()) {
        std::ofstream out(a.coloring);
        if (!out)
            throw IoError("cannot open '" + a.coloring + "' for writing");
        write_coloring(out, c);
        if (!out)
            throw IoError("failed writing '" + a.coloring + "'");
    }
    std::cerr << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, max degree "
              << max_degree(g) << ", " << c.num_colors << " colors\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cranpilot: locally orthogonal pilot design for cloud radio access networks"};
    app.require_subcommand(1);

    struct Entry {
        const char* name;
        const char* help;
        harness::ExperimentKind kind;
    };
    const Entry entries[] = {
        {"scaling", "training length growth with K", harness::ExperimentKind::scaling},
        {"density", "users per RRH histogram", harness::ExperimentKind::density},
        {"compare", "throughput of each scheme against SNR", harness::ExperimentKind::compare},
        {"sweep-k", "throughput against the number of users", harness::ExperimentKind::sweep_k},
        {"sweep-r", "throughput against the distance threshold", harness::ExperimentKind::sweep_r},
    };
    Overrides overrides[std::size(entries)];
    CLI::App* commands[std::size(entries)];
    for (std::size_t i = 0; i < std::size(entries); ++i) {
        commands[i] = app.add_subcommand(entries[i].name, entries[i].help);
        add_common(commands[i], overrides[i]);
    }

    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "dump the conflict graph and DSATUR coloring of one layout");
    graph->add_option("--rrhs", graph_args.n_rrh, "number of RRHs")->required();
    graph->add_option("--users", graph_args.n_user, "number of users")->required();
    graph->add_option("--side", graph_args.side, "square side r0");
    graph->add_option("--r", graph_args.r, "sparsification threshold");
    graph->add_option("--seed", graph_args.seed, "layout seed");
    graph->add_flag("--infinity", graph_args.infinity, "dump G_inf instead of G");
    graph->add_option("--edges", graph_args.edges, "edge list output")->required();
    graph->add_option("--coloring", graph_args.coloring, "coloring output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (std::size_t i = 0; i < std::size(entries); ++i)
            if (commands[i]->parsed())
                return run(entries[i].kind, overrides[i]);
        if (graph->parsed())
            return run_graph(graph_args);
    } catch (const InfeasibleTrainingError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
