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

#ifndef CRANPILOT_HARNESS_BASELINES_HPP
#define CRANPILOT_HARNESS_BASELINES_HPP

#include <cstdint>
#include <vector>

#include "cranpilot/association.hpp"
#include "cranpilot/pilots.hpp"

namespace cranpilot::harness {

// Independent i.i.d. complex Gaussian rows, each rescaled so that
// ||x_k||^2 = length * beta_k * p0 exactly. Not orthogonal in general.
PilotBook baseline_random_pilots(int length, std::size_t n_user, const std::vector<double>& beta, double p0,
                                 std::uint64_t seed);

struct GlobalOrthogonalPlan {
    IndexSet active;  // sorted
    PilotBook book;   // inactive users hold zero rows and zero beta
};

// T/2 users drawn uniformly without replacement, each given its own row of
// the (T/2)-point DFT basis. With fewer than T/2 users everyone is active and
// the pilots have length K.
GlobalOrthogonalPlan baseline_global_orthogonal(int coherence, std::size_t n_user, std::uint64_t seed,
                                                double beta = 1.0, double p0 = 1.0);

} // namespace cranpilot::harness

#endif
