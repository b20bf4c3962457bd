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

#ifndef CRANPILOT_HARNESS_EXPERIMENTS_HPP
#define CRANPILOT_HARNESS_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cranpilot/harness/config.hpp"

namespace cranpilot::harness {

// One CSV line. Parameter columns that do not apply to a metric stay empty.
struct ResultRow {
    std::string experiment;
    std::string scheme;
    std::size_t k = 0;
    std::size_t n = 0;
    double r0 = 0.0;
    double r = 0.0;
    int coherence = 0;
    double eta = 0.0;
    std::optional<double> snr_db;
    int trials = 0;
    std::string metric;
    double value = 0.0;
    double stderr_ = 0.0;
    std::uint64_t seed = 0;
    std::string config_hash;
};

inline constexpr const char* csv_header =
    "experiment,scheme,K,N,r0,r,T,eta,snr_db,trials,metric,value,stderr,seed,config_hash";

// Training-length growth: DSATUR colors of G and G_inf, normalized by
// density * r^2, next to the limiting envelopes.
std::vector<ResultRow> run_scaling(const ExperimentConfig& cfg);

// Distribution of |U_i| over RRHs and trials, plus the mean color count.
std::vector<ResultRow> run_density(const ExperimentConfig& cfg);

// Throughput of every configured scheme against SNR with common random numbers.
std::vector<ResultRow> run_compare(const ExperimentConfig& cfg);

// Throughput against the number of users.
std::vector<ResultRow> run_sweep_k(const ExperimentConfig& cfg);

// Throughput and training length against the threshold r. Thresholds whose
// coloring does not fit in T yield an "infeasible" row instead of throughput.
std::vector<ResultRow> run_sweep_r(const ExperimentConfig& cfg);

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

// Throws ConsistencyError for empty rows and IoError if the file cannot be written.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

} // namespace cranpilot::harness

#endif
