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

#ifndef CRANPILOT_RNG_HPP
#define CRANPILOT_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace cranpilot {

// Portable random source. The engine (mt19937_64) and the seed_seq mixing are
// fully specified by the C++ standard; the real-valued conversions below are
// done by hand because std::*_distribution output differs between standard
// libraries.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64/seed_seq/u53/box-muller";

    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1).
    double uniform();

    // Uniform on [0, 1].
    double uniform_closed();

    double standard_normal();

    // Circularly-symmetric complex Gaussian with E|z|^2 = 1.
    std::complex<double> complex_normal();

    // Uniform integer on [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Seed for an independent sub-stream, e.g. derive_seed(master, trial, stream::fading).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t stream);

namespace stream {
inline constexpr std::uint64_t layout = 1;
inline constexpr std::uint64_t fading = 2;
inline constexpr std::uint64_t noise = 3;
inline constexpr std::uint64_t random_pilots = 4;
inline constexpr std::uint64_t active_users = 5;
} // namespace stream

} // namespace cranpilot

#endif
