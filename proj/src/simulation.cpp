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

#include "cranpilot/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cranpilot/association.hpp"
#include "cranpilot/coloring.hpp"
#include "cranpilot/conflict_graph.hpp"
#include "cranpilot/error.hpp"
#include "cranpilot/format.hpp"
#include "cranpilot/harness/baselines.hpp"
#include "cranpilot/parallel.hpp"
#include "cranpilot/pilots.hpp"
#include "cranpilot/rng.hpp"

namespace cranpilot {

std::string_view to_string(Scheme s) noexcept
{
    switch (s) {
    case Scheme::proposed:
        return "proposed";
    case Scheme::refined:
        return "refined";
    case Scheme::random_pilot:
        return "random-pilot";
    case Scheme::global_orthogonal:
        return "global-orthogonal";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name)
{
    for (Scheme s : {Scheme::proposed, Scheme::refined, Scheme::random_pilot, Scheme::global_orthogonal})
        if (name == to_string(s))
            return s;
    throw ParameterError("unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(LayoutPolicy p) noexcept
{
    return p == LayoutPolicy::per_trial ? "per-trial" : "fixed";
}

LayoutPolicy parse_layout_policy(std::string_view name)
{
    if (name == "per-trial")
        return LayoutPolicy::per_trial;
    if (name == "fixed")
        return LayoutPolicy::fixed;
    throw ParameterError("unknown layout policy '" + std::string(name) + "'");
}

double noise_power_for_snr(double p0, double snr_db)
{
    return p0 / std::pow(10.0, snr_db / 10.0);
}

namespace {

bool needs_coloring(const std::vector<Scheme>& schemes)
{
    for (Scheme s : schemes)
        if (s != Scheme::global_orthogonal)
            return true;
    return false;
}

SchemeOutcome evaluate_one(const SimulationParams& params, const ChannelRealization& chan, const PilotBook& book,
                           const AssociationMap& assoc, const std::vector<double>& snr_db,
                           const Eigen::MatrixXcd& unit_noise)
{
    SchemeOutcome out;
    out.training_length = book.training_length;
    const double alpha = static_cast<double>(book.training_length) / params.coherence;
    const auto beta_prime = data_power_coefficients(book.beta, alpha);
    for (double snr : snr_db) {
        const double n0 = noise_power_for_snr(params.p0, snr);
        const auto est = mmse_estimate(chan, book, assoc, n0, unit_noise);
        auto sigma2 = interference_variance(est, chan, beta_prime, params.p0);
        out.rate_nats.push_back(throughput_lower_bound(est, chan, alpha, beta_prime, params.p0, sigma2));
        out.sigma2.push_back(std::move(sigma2));
    }
    return out;
}

} // namespace

std::vector<SchemeOutcome> evaluate_schemes(const SimulationParams& params, const NetworkLayout& layout,
                                            const ChannelRealization& chan, const std::vector<Scheme>& schemes,
                                            const std::vector<double>& snr_db, std::uint64_t pilot_seed)
{
    const std::size_t n_user = layout.n_user();
    const auto beta = std::vector<double>(n_user, params.beta);
    // Shared by every scheme: common random numbers.
    const Eigen::MatrixXcd unit_noise = pilot_noise(chan, params.coherence);

    std::optional<AssociationMap> plain;
    std::optional<Coloring> coloring;
    std::optional<PilotBook> colored_book;
    if (needs_coloring(schemes)) {
        plain = sparsify(layout, params.r);
        coloring = dsatur(build_G(*plain));
        if (coloring->num_colors >= params.coherence)
            throw InfeasibleTrainingError("training length " + std::to_string(coloring->num_colors) +
                                              " leaves no room for data within T = " +
                                              std::to_string(params.coherence),
                                          coloring->num_colors, params.coherence);
        colored_book = build_pilot_book(*coloring, beta, params.p0);
    }

    std::vector<SchemeOutcome> outcomes;
    outcomes.reserve(schemes.size());
    for (Scheme s : schemes) {
        switch (s) {
        case Scheme::proposed:
            outcomes.push_back(evaluate_one(params, chan, *colored_book, *plain, snr_db, unit_noise));
            break;
        case Scheme::refined: {
            const auto refined = refine(*plain, layout, *coloring);
            outcomes.push_back(evaluate_one(params, chan, *colored_book, refined, snr_db, unit_noise));
            break;
        }
        case Scheme::random_pilot: {
            const auto book = harness::baseline_random_pilots(
                coloring->num_colors, n_user, beta, params.p0, derive_seed(pilot_seed, 0, stream::random_pilots));
            outcomes.push_back(evaluate_one(params, chan, book, *plain, snr_db, unit_noise));
            break;
        }
        case Scheme::global_orthogonal: {
            const auto plan = harness::baseline_global_orthogonal(
                params.coherence, n_user, derive_seed(pilot_seed, 0, stream::active_users), params.beta, params.p0);
            const auto assoc = full_association(layout.n_rrh(), n_user, plan.active);
            outcomes.push_back(evaluate_one(params, chan, plan.book, assoc, snr_db, unit_noise));
            break;
        }
        }
    }
    return outcomes;
}

std::uint64_t trial_layout_seed(const TrialPlan& plan, int trial)
{
    const auto index = plan.layout_policy == LayoutPolicy::fixed ? 0u : static_cast<std::uint64_t>(trial);
    return derive_seed(plan.seed, index, stream::layout);
}

std::vector<TrialRecord> simulate_trials(const TrialPlan& plan)
{
    if (plan.trials < 1)
        throw ParameterError("simulate_trials: need at least one trial");
    if (plan.schemes.empty() || plan.snr_db.empty())
        throw ParameterError("simulate_trials: scheme and SNR lists must be non-empty");

    std::optional<NetworkLayout> shared = plan.layout;
    if (!shared && plan.layout_policy == LayoutPolicy::fixed)
        shared = generate_layout(plan.params.n_rrh, plan.params.n_user, plan.params.side, trial_layout_seed(plan, 0));

    std::vector<TrialRecord> records(static_cast<std::size_t>(plan.trials));
    parallel_for(records.size(), plan.workers, [&](std::size_t t) {
        const int trial = static_cast<int>(t);
        const NetworkLayout layout = shared ? *shared
                                            : generate_layout(plan.params.n_rrh, plan.params.n_user,
                                                              plan.params.side, trial_layout_seed(plan, trial));
        const auto fading_seed = derive_seed(plan.seed, t, stream::fading);
        const ChannelRealization chan =
            plan.fading == FadingModel::point_mass
                ? point_mass_channel(layout, plan.params.eta, plan.params.min_distance)
                : generate_channel(layout, plan.params.eta, fading_seed, plan.params.min_distance);
        const auto pilot_seed = derive_seed(plan.seed, t, stream::random_pilots);
        records[t].outcomes = evaluate_schemes(plan.params, layout, chan, plan.schemes, plan.snr_db, pilot_seed);
    });
    return records;
}

MeanStderr mean_stderr(const std::vector<double>& values)
{
    MeanStderr out;
    if (values.empty())
        return out;
    double sum = 0.0;
    for (double v : values)
        sum += v;
    const auto n = static_cast<double>(values.size());
    out.mean = sum / n;
    if (values.size() > 1) {
        // Shifted sums: exact zero for constant samples, no cancellation otherwise.
        const double shift = values.front();
        double s1 = 0.0, s2 = 0.0;
        for (double v : values) {
            s1 += v - shift;
            s2 += (v - shift) * (v - shift);
        }
        const double var = std::max(0.0, (s2 - s1 * s1 / n) / (n - 1.0));
        out.stderr_ = std::sqrt(var / n);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> describe(const TrialPlan& plan)
{
    const auto& p = plan.params;
    std::vector<std::pair<std::string, std::string>> echo{
        {"n_rrh", std::to_string(p.n_rrh)},
        {"n_user", std::to_string(p.n_user)},
        {"side_m", format_number(p.side)},
        {"r_m", format_number(p.r)},
        {"coherence", std::to_string(p.coherence)},
        {"eta", format_number(p.eta)},
        {"p0", format_number(p.p0)},
        {"beta", format_number(p.beta)},
        {"min_distance_m", format_number(p.min_distance)},
        {"pathloss_distance", "l2"},
        {"trials", std::to_string(plan.trials)},
        {"seed", std::to_string(plan.seed)},
        {"layout_policy", std::string(to_string(plan.layout_policy))},
        {"fading", plan.fading == FadingModel::rayleigh ? "rayleigh" : "point-mass"},
        {"rng", std::string(Rng::algorithm)},
        {"rate_unit", "nats"},
    };
    for (Scheme s : plan.schemes)
        echo.emplace_back("scheme", std::string(to_string(s)));
    for (double snr : plan.snr_db)
        echo.emplace_back("snr_db", format_number(snr));
    return echo;
}

ThroughputReport run_monte_carlo(const TrialPlan& plan)
{
    if (plan.schemes.size() != 1 || plan.snr_db.size() != 1)
        throw ParameterError("run_monte_carlo: expects exactly one scheme and one SNR");

    const auto records = simulate_trials(plan);
    ThroughputReport report;
    report.per_trial_rates.reserve(records.size());
    for (const auto& rec : records) {
        report.per_trial_rates.push_back(rec.outcomes.front().rate_nats.front());
        report.training_lengths.push_back(rec.outcomes.front().training_length);
    }
    const auto stats = mean_stderr(report.per_trial_rates);
    report.rate_nats = stats.mean;
    report.stderr_nats = stats.stderr_;
    report.interference_variances = records.back().outcomes.front().sigma2.front();
    report.config_echo = describe(plan);
    return report;
}

} // namespace cranpilot
