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

#ifndef CRANPILOT_CHANNEL_HPP
#define CRANPILOT_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cranpilot/association.hpp"
#include "cranpilot/geometry.hpp"
#include "cranpilot/pilots.hpp"

namespace cranpilot {

// One block-fading realization. small_scale is N x K, i.i.d. CN(0, 1);
// large_scale(i, k) = max(d_ik, min_distance)^(-eta / 2) with d the
// Euclidean RRH-user distance.
struct ChannelRealization {
    Eigen::MatrixXcd small_scale;
    Eigen::MatrixXd large_scale;
    double pathloss_exponent = 0.0;
    double min_distance = 1.0;
    std::uint64_t seed = 0;
    // Point-mass test channel: no noise is added during estimation either.
    bool deterministic = false;

    Eigen::Index n_rrh() const noexcept { return large_scale.rows(); }
    Eigen::Index n_user() const noexcept { return large_scale.cols(); }
};

// Throws DegenerateGeometryError when a user coincides with an RRH.
Eigen::MatrixXd large_scale_fading(const NetworkLayout& layout, double eta, double min_distance = 1.0);

ChannelRealization generate_channel(const NetworkLayout& layout, double eta, std::uint64_t seed,
                                    double min_distance = 1.0);

// h_ik = 1 everywhere and noiseless pilots; used to pin Monte Carlo variance to zero.
ChannelRealization point_mass_channel(const NetworkLayout& layout, double eta, double min_distance = 1.0);

struct EstimationResult {
    Eigen::MatrixXcd h_hat; // zero wherever the RRH does not serve the user
    Eigen::MatrixXd mse;    // exactly 1 wherever the RRH does not serve the user
    double noise_power = 0.0;
};

// Per-RRH linear MMSE estimate of h_ik for every k in U_i. The received pilot
// block y_i includes every user (served or not) plus noise of power n0. The
// unit-variance noise is drawn from a stream derived from chan.seed, one
// channel use at a time, so books of different length see the same leading
// noise samples.
EstimationResult mmse_estimate(const ChannelRealization& chan, const PilotBook& book, const AssociationMap& assoc,
                               double n0);

// Same, with caller-supplied unit-variance noise (N x >= training_length).
EstimationResult mmse_estimate(const ChannelRealization& chan, const PilotBook& book, const AssociationMap& assoc,
                               double n0, const Eigen::MatrixXcd& unit_noise);

// Unit-variance pilot noise for a channel realization, N x length.
Eigen::MatrixXcd pilot_noise(const ChannelRealization& chan, int length);

// sigma^2_i = sum_k gamma_ik^2 beta'_k p0 MSE_ik + N0.
Eigen::VectorXd interference_variance(const EstimationResult& est, const ChannelRealization& chan,
                                      const std::vector<double>& beta_prime, double p0);

// (1 - alpha) * log det(I + R_V^-1 H R_X H^H) in nats, where H_ik = hhat_ik gamma_ik,
// R_V = diag(sigma^2) and R_X = diag(beta'_k p0).
double throughput_lower_bound(const EstimationResult& est, const ChannelRealization& chan, double alpha,
                              const std::vector<double>& beta_prime, double p0);

// Same, reusing precomputed interference variances.
double throughput_lower_bound(const EstimationResult& est, const ChannelRealization& chan, double alpha,
                              const std::vector<double>& beta_prime, double p0, const Eigen::VectorXd& sigma2);

// log det of a Hermitian positive-definite matrix via Cholesky.
double log_det_hpd(const Eigen::MatrixXcd& m);

// beta'_k = (1 - alpha beta_k) / (1 - alpha).
std::vector<double> data_power_coefficients(const std::vector<double>& beta, double alpha);

} // namespace cranpilot

#endif
