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

#ifndef CRANPILOT_ASYMPTOTICS_HPP
#define CRANPILOT_ASYMPTOTICS_HPP

namespace cranpilot::asymptotics {

// f(x) = 1 - x + x ln x on [1, inf). Throws ParameterError for x < 1.
double f(double x);

// The x >= 1 with |f(x) - y| <= 1e-12, by bisection on an expanding bracket.
double f_inverse(double y);

// 4 f^-1(1 / (4 rho)): limit envelope of training length / (delta r^2).
double chromatic_scaling_bound(double rho);

// 16 f^-1(1 / (16 rho)): limit envelope of the G_inf max degree / (delta r^2).
double degree_scaling_bound(double rho);

// r = sqrt(rho ln k / density), so that density r^2 / ln k == rho.
double radius_for_rho(double k, double density, double rho);

struct ScalingBound {
    double rho = 0.0;
    double chromatic_bound = 0.0;
    double degree_bound = 0.0;
};

ScalingBound scaling_bound(double rho);

} // namespace cranpilot::asymptotics

#endif
