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

#include "cranpilot/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cranpilot/error.hpp"

namespace cranpilot::asymptotics {

double f(double x)
{
    if (!(x >= 1.0))
        throw ParameterError("f: argument must be >= 1");
    return 1.0 - x + x * std::log(x);
}

double f_inverse(double y)
{
    if (!(y >= 0.0) || !std::isfinite(y))
        throw ParameterError("f_inverse: argument must be a finite value >= 0");
    if (y == 0.0)
        return 1.0;

    constexpr double tolerance = 1e-12;
    double lo = 1.0;
    double hi = std::max(std::numbers::e, y + 2.0);
    while (f(hi) < y) {
        lo = hi;
        hi *= 2.0;
    }
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break; // bracket exhausted at double resolution
        const double value = f(mid);
        if (std::abs(value - y) <= tolerance)
            return mid;
        if (value < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double chromatic_scaling_bound(double rho)
{
    if (!(rho > 0.0))
        throw ParameterError("chromatic_scaling_bound: rho must be positive");
    return 4.0 * f_inverse(1.0 / (4.0 * rho));
}

double degree_scaling_bound(double rho)
{
    if (!(rho > 0.0))
        throw ParameterError("degree_scaling_bound: rho must be positive");
    return 16.0 * f_inverse(1.0 / (16.0 * rho));
}

double radius_for_rho(double k, double density, double rho)
{
    if (!(k >= 2.0))
        throw ParameterError("radius_for_rho: need at least 2 users");
    if (!(density > 0.0) || !(rho > 0.0))
        throw ParameterError("radius_for_rho: density and rho must be positive");
    return std::sqrt(rho * std::log(k) / density);
}

ScalingBound scaling_bound(double rho)
{
    return {rho, chromatic_scaling_bound(rho), degree_scaling_bound(rho)};
}

} // namespace cranpilot::asymptotics
