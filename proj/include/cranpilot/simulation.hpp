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

#ifndef CRANPILOT_SIMULATION_HPP
#define CRANPILOT_SIMULATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cranpilot/channel.hpp"
#include "cranpilot/geometry.hpp"

namespace cranpilot {

enum class Scheme {
    proposed,          // plain sparsification + DSATUR pilots
    refined,           // same pilots, association topped up to one user per color
    random_pilot,      // Gaussian pilots of the proposed length, plain association
    global_orthogonal, // T/2 active users with mutually orthogonal pilots
};

std::string_view to_string(Scheme s) noexcept;
Scheme parse_scheme(std::string_view name);

enum class LayoutPolicy { per_trial, fixed };
std::string_view to_string(LayoutPolicy p) noexcept;
LayoutPolicy parse_layout_policy(std::string_view name);

enum class FadingModel { rayleigh, point_mass };

struct SimulationParams {
    std::size_t n_rrh = 100;
    std::size_t n_user = 100;
    double side = 100.0;      // r0, meters
    double r = 10.0;          // sparsification threshold, meters
    int coherence = 100;      // T, channel uses
    double eta = 3.5;
    double p0 = 1.0;
    double beta = 1.0;        // training power coefficient, same for all users
    double min_distance = 1.0;
};

// N0 = p0 / 10^(snr_db / 10).
double noise_power_for_snr(double p0, double snr_db);

struct SchemeOutcome {
    int training_length = 0;
    std::vector<double> rate_nats;        // one per SNR
    std::vector<Eigen::VectorXd> sigma2;  // interference-plus-noise per SNR
};

// Evaluates each scheme on one layout/channel pair. `pilot_seed` feeds the
// random-pilot and active-user draws. Throws InfeasibleTrainingError when a
// coloring-based scheme needs T or more channel uses.
std::vector<SchemeOutcome> evaluate_schemes(const SimulationParams& params, const NetworkLayout& layout,
                                            const ChannelRealization& chan, const std::vector<Scheme>& schemes,
                                            const std::vector<double>& snr_db, std::uint64_t pilot_seed);

struct TrialPlan {
    SimulationParams params;
    std::vector<Scheme> schemes{Scheme::proposed};
    std::vector<double> snr_db{20.0};
    int trials = 1;
    std::uint64_t seed = 1;
    LayoutPolicy layout_policy = LayoutPolicy::per_trial;
    FadingModel fading = FadingModel::rayleigh;
    int workers = 1;
    // When set, every trial uses this layout regardless of layout_policy.
    std::optional<NetworkLayout> layout;
};

struct TrialRecord {
    std::vector<SchemeOutcome> outcomes; // one per scheme
};

// Layout seed for a trial under the plan's policy.
std::uint64_t trial_layout_seed(const TrialPlan& plan, int trial);

// Runs every trial (possibly in parallel); results are indexed by trial.
std::vector<TrialRecord> simulate_trials(const TrialPlan& plan);

struct ThroughputReport {
    double rate_nats = 0.0;
    double stderr_nats = 0.0;
    std::vector<double> per_trial_rates;
    std::vector<int> training_lengths;
    Eigen::VectorXd interference_variances; // last trial
    std::vector<std::pair<std::string, std::string>> config_echo;
};

// Monte Carlo estimate of the throughput for a plan with exactly one scheme and one SNR.
ThroughputReport run_monte_carlo(const TrialPlan& plan);

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
};

// Sample mean and standard error; the sum runs in index order.
MeanStderr mean_stderr(const std::vector<double>& values);

std::vector<std::pair<std::string, std::string>> describe(const TrialPlan& plan);

} // namespace cranpilot

#endif
