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

#include "cranpilot/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <ostream>

#include "cranpilot/association.hpp"
#include "cranpilot/asymptotics.hpp"
#include "cranpilot/coloring.hpp"
#include "cranpilot/conflict_graph.hpp"
#include "cranpilot/error.hpp"
#include "cranpilot/format.hpp"
#include "cranpilot/parallel.hpp"
#include "cranpilot/simulation.hpp"

namespace cranpilot::harness {

namespace {

class RowFactory {
public:
    explicit RowFactory(const ExperimentConfig& cfg) : cfg_(cfg), hash_(cfg.hash()) {}

    ResultRow make(std::string_view scheme, std::size_t k, std::size_t n, double r, std::optional<double> snr,
                   std::string metric, double value, double stderr_ = 0.0) const
    {
        ResultRow row;
        row.experiment = std::string(to_string(cfg_.kind));
        row.scheme = std::string(scheme);
        row.k = k;
        row.n = n;
        row.r0 = cfg_.side;
        row.r = r;
        row.coherence = cfg_.coherence;
        row.eta = cfg_.eta;
        row.snr_db = snr;
        row.trials = cfg_.trials;
        row.metric = std::move(metric);
        row.value = value;
        row.stderr_ = stderr_;
        row.seed = cfg_.seed;
        row.config_hash = hash_;
        return row;
    }

private:
    const ExperimentConfig& cfg_;
    std::string hash_;
};

TrialPlan plan_for(const ExperimentConfig& cfg, std::size_t k, double r)
{
    TrialPlan plan;
    plan.params.n_rrh = cfg.n_rrh;
    plan.params.n_user = k;
    plan.params.side = cfg.side;
    plan.params.r = r;
    plan.params.coherence = cfg.coherence;
    plan.params.eta = cfg.eta;
    plan.params.p0 = cfg.p0;
    plan.params.beta = cfg.beta;
    plan.params.min_distance = cfg.min_distance;
    plan.schemes = cfg.schemes;
    plan.snr_db = cfg.snr_db;
    plan.trials = cfg.trials;
    plan.seed = cfg.seed;
    plan.layout_policy = cfg.layout_policy;
    plan.workers = cfg.workers;
    return plan;
}

NetworkLayout layout_for(const TrialPlan& plan, int trial)
{
    return generate_layout(plan.params.n_rrh, plan.params.n_user, plan.params.side, trial_layout_seed(plan, trial));
}

MeanStderr stats_of(const std::vector<double>& v)
{
    return mean_stderr(v);
}

constexpr double nats_to_bits = 1.0 / std::numbers::ln2;

// Throughput rows shared by compare, sweep-k and sweep-r.
void throughput_rows(const RowFactory& rows_for, const ExperimentConfig& cfg, const std::vector<TrialRecord>& records,
                     std::size_t k, double r, std::vector<ResultRow>& out)
{
    const auto& schemes = cfg.schemes;
    const auto proposed = std::find(schemes.begin(), schemes.end(), Scheme::proposed);
    for (std::size_t s = 0; s < schemes.size(); ++s) {
        const auto name = to_string(schemes[s]);
        std::vector<double> lengths;
        for (const auto& rec : records)
            lengths.push_back(rec.outcomes[s].training_length);
        const auto len = stats_of(lengths);
        out.push_back(rows_for.make(name, k, cfg.n_rrh, r, std::nullopt, "training_length", len.mean, len.stderr_));

        for (std::size_t q = 0; q < cfg.snr_db.size(); ++q) {
            std::vector<double> rates;
            for (const auto& rec : records)
                rates.push_back(rec.outcomes[s].rate_nats[q] * nats_to_bits);
            const auto rate = stats_of(rates);
            out.push_back(rows_for.make(name, k, cfg.n_rrh, r, cfg.snr_db[q], "throughput_bits", rate.mean,
                                        rate.stderr_));

            if (proposed == schemes.end() || schemes[s] == Scheme::proposed)
                continue;
            const auto base = static_cast<std::size_t>(proposed - schemes.begin());
            std::vector<double> diff;
            for (const auto& rec : records)
                diff.push_back((rec.outcomes[s].rate_nats[q] - rec.outcomes[base].rate_nats[q]) * nats_to_bits);
            const auto d = stats_of(diff);
            out.push_back(rows_for.make(name, k, cfg.n_rrh, r, cfg.snr_db[q], "paired_gain_over_proposed_bits",
                                        d.mean, d.stderr_));
        }
    }
}

// Mean overlap of an l_inf ball of radius r, centered uniformly in [0, s]^2, with the square.
double expected_ball_fraction(double r, double s)
{
    const double axis = r >= s ? 1.0 : (2.0 * r * s - r * r) / (s * s);
    return axis * axis;
}

} // namespace

std::vector<ResultRow> run_scaling(const ExperimentConfig& cfg)
{
    cfg.validate();
    const RowFactory rows_for(cfg);
    std::vector<ResultRow> out;

    struct Sample {
        double colors_g = 0, colors_ginf = 0, degree_g = 0, degree_ginf = 0;
        bool bound_violation = false;
        bool order_anomaly = false;
    };

    for (std::size_t k : cfg.users_grid()) {
        const double r = cfg.threshold_for(k);
        const double density = static_cast<double>(k) / (cfg.side * cfg.side);
        const double scale = density * r * r;
        const auto plan = plan_for(cfg, k, r);

        std::vector<Sample> samples(static_cast<std::size_t>(cfg.trials));
        parallel_for(samples.size(), cfg.workers, [&](std::size_t t) {
            const auto layout = layout_for(plan, static_cast<int>(t));
            const auto g = build_G(sparsify(layout, r));
            const auto ginf = build_G_infinity(layout, r);
            const auto cg = dsatur(g);
            const auto cinf = dsatur(ginf);
            auto& s = samples[t];
            s.colors_g = cg.num_colors;
            s.colors_ginf = cinf.num_colors;
            s.degree_g = static_cast<double>(max_degree(g));
            s.degree_ginf = static_cast<double>(max_degree(ginf));
            s.bound_violation = cg.num_colors > s.degree_g + 1 || cinf.num_colors > s.degree_ginf + 1;
            s.order_anomaly = cg.num_colors > cinf.num_colors;
        });

        auto column = [&](auto field) {
            std::vector<double> v;
            for (const auto& s : samples)
                v.push_back(field(s));
            return stats_of(v);
        };
        const auto colors_g = column([](const Sample& s) { return s.colors_g; });
        const auto colors_ginf = column([](const Sample& s) { return s.colors_ginf; });
        const auto degree_g = column([](const Sample& s) { return s.degree_g; });
        const auto degree_ginf = column([](const Sample& s) { return s.degree_ginf; });
        double violations = 0, anomalies = 0;
        for (const auto& s : samples) {
            violations += s.bound_violation ? 1 : 0;
            anomalies += s.order_anomaly ? 1 : 0;
        }

        auto add = [&](std::string_view graph, std::string metric, double value, double se = 0.0) {
            out.push_back(rows_for.make(graph, k, cfg.n_rrh, r, std::nullopt, std::move(metric), value, se));
        };
        add("G", "colors", colors_g.mean, colors_g.stderr_);
        add("G", "normalized_colors", colors_g.mean / scale, colors_g.stderr_ / scale);
        add("G", "max_degree", degree_g.mean, degree_g.stderr_);
        add("G_inf", "colors", colors_ginf.mean, colors_ginf.stderr_);
        add("G_inf", "normalized_colors", colors_ginf.mean / scale, colors_ginf.stderr_ / scale);
        add("G_inf", "max_degree", degree_ginf.mean, degree_ginf.stderr_);
        add("G_inf", "normalized_max_degree", degree_ginf.mean / scale, degree_ginf.stderr_ / scale);
        if (cfg.rho) {
            add("bound", "chromatic_scaling_bound", asymptotics::chromatic_scaling_bound(*cfg.rho));
            add("bound", "degree_scaling_bound", asymptotics::degree_scaling_bound(*cfg.rho));
        }
        add("dsatur", "degree_bound_violations", violations);
        add("dsatur", "color_order_anomalies", anomalies);
    }
    return out;
}

std::vector<ResultRow> run_density(const ExperimentConfig& cfg)
{
    cfg.validate();
    const RowFactory rows_for(cfg);
    std::vector<ResultRow> out;

    for (std::size_t k : cfg.users_grid()) {
        const double r = cfg.threshold_for(k);
        const auto plan = plan_for(cfg, k, r);

        struct Sample {
            std::vector<std::size_t> sizes;
            double colors = 0;
        };
        std::vector<Sample> samples(static_cast<std::size_t>(cfg.trials));
        parallel_for(samples.size(), cfg.workers, [&](std::size_t t) {
            const auto layout = layout_for(plan, static_cast<int>(t));
            const auto assoc = sparsify(layout, r);
            auto& s = samples[t];
            for (std::size_t i = 0; i < assoc.n_rrh(); ++i)
                s.sizes.push_back(assoc.served_users(i).size());
            s.colors = dsatur(build_G(assoc)).num_colors;
        });

        std::map<std::size_t, double> histogram;
        std::vector<double> per_trial_mean, colors;
        double total = 0;
        for (const auto& s : samples) {
            double sum = 0;
            for (auto size : s.sizes) {
                histogram[size] += 1;
                sum += static_cast<double>(size);
            }
            total += static_cast<double>(s.sizes.size());
            per_trial_mean.push_back(sum / static_cast<double>(s.sizes.size()));
            colors.push_back(s.colors);
        }

        const std::size_t largest = histogram.empty() ? 0 : histogram.rbegin()->first;
        for (std::size_t size = 0; size <= largest; ++size) {
            const auto it = histogram.find(size);
            const double mass = it == histogram.end() ? 0.0 : it->second / total;
            out.push_back(rows_for.make("proposed", k, cfg.n_rrh, r, std::nullopt,
                                        "users_per_rrh_pmf_" + std::to_string(size), mass));
        }
        const auto mean = stats_of(per_trial_mean);
        const auto color = stats_of(colors);
        const double density = static_cast<double>(k) / (cfg.side * cfg.side);
        out.push_back(rows_for.make("proposed", k, cfg.n_rrh, r, std::nullopt, "mean_users_per_rrh", mean.mean,
                                    mean.stderr_));
        out.push_back(rows_for.make("analytic", k, cfg.n_rrh, r, std::nullopt, "interior_mean_users_per_rrh",
                                    4.0 * r * r * density));
        out.push_back(rows_for.make("analytic", k, cfg.n_rrh, r, std::nullopt, "expected_users_per_rrh",
                                    static_cast<double>(k) * expected_ball_fraction(r, cfg.side)));
        out.push_back(
            rows_for.make("proposed", k, cfg.n_rrh, r, std::nullopt, "average_colors", color.mean, color.stderr_));
    }
    return out;
}

std::vector<ResultRow> run_compare(const ExperimentConfig& cfg)
{
    cfg.validate();
    const RowFactory rows_for(cfg);
    std::vector<ResultRow> out;
    const std::size_t k = cfg.n_user;
    const double r = cfg.threshold_for(k);
    const auto records = simulate_trials(plan_for(cfg, k, r));
    throughput_rows(rows_for, cfg, records, k, r, out);
    return out;
}

std::vector<ResultRow> run_sweep_k(const ExperimentConfig& cfg)
{
    cfg.validate();
    const RowFactory rows_for(cfg);
    std::vector<ResultRow> out;
    for (std::size_t k : cfg.users_grid()) {
        const double r = cfg.threshold_for(k);
        const auto records = simulate_trials(plan_for(cfg, k, r));
        throughput_rows(rows_for, cfg, records, k, r, out);
    }
    return out;
}

std::vector<ResultRow> run_sweep_r(const ExperimentConfig& cfg)
{
    cfg.validate();
    const RowFactory rows_for(cfg);
    std::vector<ResultRow> out;
    const std::size_t k = cfg.n_user;
    for (double r : cfg.threshold_grid()) {
        try {
            const auto records = simulate_trials(plan_for(cfg, k, r));
            throughput_rows(rows_for, cfg, records, k, r, out);
        } catch (const InfeasibleTrainingError& e) {
            std::cerr << "sweep-r: r = " << format_number(r) << " skipped: " << e.what() << '\n';
            out.push_back(rows_for.make("proposed", k, cfg.n_rrh, r, std::nullopt, "infeasible", e.colors()));
        }
    }
    return out;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg)
{
    switch (cfg.kind) {
    case ExperimentKind::scaling:
        return run_scaling(cfg);
    case ExperimentKind::density:
        return run_density(cfg);
    case ExperimentKind::compare:
        return run_compare(cfg);
    case ExperimentKind::sweep_k:
        return run_sweep_k(cfg);
    case ExperimentKind::sweep_r:
        return run_sweep_r(cfg);
    }
    throw ParameterError("unknown experiment kind");
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows)
{
    out << csv_header << '\n';
    for (const auto& row : rows) {
        out << row.experiment << ',' << row.scheme << ',' << row.k << ',' << row.n << ','
            << format_number(row.r0) << ',' << format_number(row.r) << ',' << row.coherence << ','
            << format_number(row.eta) << ',' << (row.snr_db ? format_number(*row.snr_db) : std::string()) << ','
            << row.trials << ',' << row.metric << ',' << format_number(row.value) << ','
            << format_number(row.stderr_) << ',' << row.seed << ',' << row.config_hash << '\n';
    }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path)
{
    if (rows.empty())
        throw ConsistencyError("emit_csv: no rows to write");
    for (const auto& row : rows)
        if (!std::isfinite(row.value) || !std::isfinite(row.stderr_))
            throw ConsistencyError("emit_csv: non-finite value for metric '" + row.metric + "'");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + path + "' for writing");
    write_csv(file, rows);
    file.flush();
    if (!file)
        throw IoError("failed writing '" + path + "'");
}

} // namespace cranpilot::harness
