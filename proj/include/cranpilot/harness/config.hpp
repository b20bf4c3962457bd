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

#ifndef CRANPILOT_HARNESS_CONFIG_HPP
#define CRANPILOT_HARNESS_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cranpilot/simulation.hpp"

namespace cranpilot::harness {

enum class ExperimentKind { scaling, density, compare, sweep_k, sweep_r };

std::string_view to_string(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment(std::string_view name);

// Everything an experiment needs. Grids left empty fall back to the single
// value (n_user for k_grid, r for r_grid). When rho is set, the threshold
// for each K is radius_for_rho(K, K / side^2, rho) instead of r.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::compare;
    std::size_t n_rrh = 300;
    std::size_t n_user = 300;
    std::vector<std::size_t> k_grid;
    double side = 100.0;
    double r = 10.0;
    std::vector<double> r_grid;
    std::optional<double> rho;
    int coherence = 100;
    double eta = 3.5;
    std::vector<double> snr_db{20.0};
    double beta = 1.0;
    double p0 = 1.0;
    double min_distance = 1.0;
    int trials = 100;
    std::uint64_t seed = 1;
    LayoutPolicy layout_policy = LayoutPolicy::per_trial;
    std::vector<Scheme> schemes{Scheme::proposed};
    int workers = 1;

    std::vector<std::size_t> users_grid() const;
    std::vector<double> threshold_grid() const;
    // Threshold used for K users: rho-derived if rho is set, else r.
    double threshold_for(std::size_t k) const;

    // Throws ParameterError on any domain violation.
    void validate() const;

    // Canonical "key = value" text; parse_config(canonical()) reproduces the config.
    std::string canonical() const;

    // 16 hex digits of FNV-1a over canonical(). The worker count is excluded
    // because it never changes results.
    std::string hash() const;
};

// Reads "key = value" lines; '#' starts a comment, lists are comma-separated.
// Unknown keys and malformed values raise ParameterError.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

} // namespace cranpilot::harness

#endif
