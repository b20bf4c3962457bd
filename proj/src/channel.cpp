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

#include "cranpilot/channel.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "cranpilot/error.hpp"
#include "cranpilot/rng.hpp"

namespace cranpilot {

Eigen::MatrixXd large_scale_fading(const NetworkLayout& layout, double eta, double min_distance)
{
    if (!(eta > 0.0))
        throw ParameterError("pathloss exponent must be positive");
    if (!(min_distance > 0.0))
        throw ParameterError("minimum distance clamp must be positive");

    const auto n = static_cast<Eigen::Index>(layout.n_rrh());
    const auto k_count = static_cast<Eigen::Index>(layout.n_user());
    Eigen::MatrixXd gamma(n, k_count);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < k_count; ++k) {
            const double d = dist_l2(layout.rrh(static_cast<std::size_t>(i)), layout.user(static_cast<std::size_t>(k)));
            if (d == 0.0)
                throw DegenerateGeometryError("user " + std::to_string(k) + " is co-located with RRH " +
                                              std::to_string(i));
            gamma(i, k) = std::pow(std::max(d, min_distance), -eta / 2.0);
        }
    }
    return gamma;
}

ChannelRealization generate_channel(const NetworkLayout& layout, double eta, std::uint64_t seed, double min_distance)
{
    ChannelRealization chan;
    chan.large_scale = large_scale_fading(layout, eta, min_distance);
    chan.pathloss_exponent = eta;
    chan.min_distance = min_distance;
    chan.seed = seed;

    Rng rng(derive_seed(seed, 0, stream::fading));
    chan.small_scale.resize(chan.large_scale.rows(), chan.large_scale.cols());
    // Column-major draw order: user k's fades do not depend on later users.
    for (Eigen::Index k = 0; k < chan.small_scale.cols(); ++k)
        for (Eigen::Index i = 0; i < chan.small_scale.rows(); ++i)
            chan.small_scale(i, k) = rng.complex_normal();
    return chan;
}

ChannelRealization point_mass_channel(const NetworkLayout& layout, double eta, double min_distance)
{
    ChannelRealization chan;
    chan.large_scale = large_scale_fading(layout, eta, min_distance);
    chan.small_scale = Eigen::MatrixXcd::Ones(chan.large_scale.rows(), chan.large_scale.cols());
    chan.pathloss_exponent = eta;
    chan.min_distance = min_distance;
    chan.deterministic = true;
    return chan;
}

Eigen::MatrixXcd pilot_noise(const ChannelRealization& chan, int length)
{
    Eigen::MatrixXcd z(chan.n_rrh(), length);
    if (chan.deterministic) {
        z.setZero();
        return z;
    }
    Rng rng(derive_seed(chan.seed, 0, stream::noise));
    for (int t = 0; t < length; ++t)
        for (Eigen::Index i = 0; i < z.rows(); ++i)
            z(i, t) = rng.complex_normal();
    return z;
}

EstimationResult mmse_estimate(const ChannelRealization& chan, const PilotBook& book, const AssociationMap& assoc,
                               double n0)
{
    return mmse_estimate(chan, book, assoc, n0, pilot_noise(chan, book.training_length));
}

namespace {

// Received pilot blocks Y = (h o gamma) X, N x L, without noise.
Eigen::MatrixXcd received_pilots(const ChannelRealization& chan, const PilotBook& book)
{
    const Eigen::MatrixXcd effective = chan.small_scale.cwiseProduct(chan.large_scale.cast<std::complex<double>>());
    if (!book.structured())
        return effective * book.pilots;

    // x_k = s_k e_{row(k)}: fold users onto their base row first.
    const Eigen::Index rows = book.base_rows.rows();
    Eigen::MatrixXcd folded = Eigen::MatrixXcd::Zero(chan.n_rrh(), rows);
    for (Eigen::Index k = 0; k < chan.n_user(); ++k) {
        const double s = book.scale(static_cast<std::size_t>(k));
        if (s == 0.0)
            continue;
        folded.col(book.row_of[static_cast<std::size_t>(k)]) += s * effective.col(k);
    }
    return folded * book.base_rows;
}

} // namespace

EstimationResult mmse_estimate(const ChannelRealization& chan, const PilotBook& book, const AssociationMap& assoc,
                               double n0, const Eigen::MatrixXcd& unit_noise)
{
    if (!(n0 > 0.0))
        throw ParameterError("mmse_estimate: noise power must be positive");
    const Eigen::Index n = chan.n_rrh();
    const Eigen::Index k_count = chan.n_user();
    const int length = book.training_length;
    if (static_cast<Eigen::Index>(assoc.n_rrh()) != n || static_cast<Eigen::Index>(assoc.n_user()) != k_count ||
        static_cast<Eigen::Index>(book.n_user()) != k_count || book.pilots.cols() != length)
        throw ConsistencyError("mmse_estimate: channel, pilot book and association sizes differ");
    if (unit_noise.rows() != n || unit_noise.cols() < length)
        throw ConsistencyError("mmse_estimate: noise block too small");

    EstimationResult est;
    est.noise_power = n0;
    est.h_hat = Eigen::MatrixXcd::Zero(n, k_count);
    est.mse = Eigen::MatrixXd::Ones(n, k_count);

    Eigen::MatrixXcd y = received_pilots(chan, book);
    y += std::sqrt(n0) * unit_noise.leftCols(length);

    const bool structured = book.structured();
    const Eigen::Index base_count = structured ? book.base_rows.rows() : 0;
    Eigen::VectorXd scale2;
    if (structured) {
        scale2.resize(k_count);
        for (Eigen::Index k = 0; k < k_count; ++k) {
            const double s = book.scale(static_cast<std::size_t>(k));
            scale2(k) = s * s;
        }
    }
    std::vector<char> in_set(static_cast<std::size_t>(k_count), 0);

    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& served = assoc.served_users(static_cast<std::size_t>(i));
        if (served.empty())
            continue;
        const auto m = static_cast<Eigen::Index>(served.size());

        // C = sum_{k in U_i} gamma^2 x_k^H x_k + n0 I
        Eigen::MatrixXcd xs(m, length);
        for (Eigen::Index a = 0; a < m; ++a)
            xs.row(a) = chan.large_scale(i, served[static_cast<std::size_t>(a)]) *
                        book.pilots.row(served[static_cast<std::size_t>(a)]);
        Eigen::MatrixXcd cov = xs.adjoint() * xs;
        cov.diagonal().array() += n0;

        // v_k = C^-1 x_k^H, so w_k^H = gamma_ik v_k.
        Eigen::LLT<Eigen::MatrixXcd> llt(cov);
        Eigen::MatrixXcd v(length, m);
        for (Eigen::Index a = 0; a < m; ++a)
            v.col(a) = book.pilots.row(served[static_cast<std::size_t>(a)]).adjoint();
        v = llt.solve(v);

        for (auto k : served)
            in_set[k] = 1;

        // Out-of-set leakage |x_k' v|^2 summed with weights gamma_ik'^2.
        Eigen::VectorXd leakage = Eigen::VectorXd::Zero(m);
        if (structured) {
            Eigen::VectorXd per_row = Eigen::VectorXd::Zero(base_count);
            for (Eigen::Index k = 0; k < k_count; ++k) {
                if (in_set[static_cast<std::size_t>(k)])
                    continue;
                const double g = chan.large_scale(i, k);
                per_row(book.row_of[static_cast<std::size_t>(k)]) += g * g * scale2(k);
            }
            const Eigen::MatrixXcd projected = book.base_rows * v; // base_count x m
            for (Eigen::Index a = 0; a < m; ++a)
                leakage(a) = (per_row.array() * projected.col(a).array().abs2()).sum();
        } else {
            const Eigen::MatrixXcd projected = book.pilots * v; // K x m
            for (Eigen::Index k = 0; k < k_count; ++k) {
                if (in_set[static_cast<std::size_t>(k)])
                    continue;
                const double g = chan.large_scale(i, k);
                leakage += (g * g) * projected.row(k).transpose().cwiseAbs2();
            }
        }

        // 1 - gamma^2 x C^-1 x^H is the diagonal of the in-set error covariance
        // (I + S S^H / n0)^-1 with S = rows gamma_ik x_k. Reading it off the
        // inverse avoids the cancellation of the subtraction at high SNR.
        Eigen::MatrixXcd info = (xs * xs.adjoint()) / n0;
        info.diagonal().array() += 1.0;
        const Eigen::MatrixXcd err_cov =
            Eigen::LLT<Eigen::MatrixXcd>(info).solve(Eigen::MatrixXcd::Identity(m, m));

        for (Eigen::Index a = 0; a < m; ++a) {
            const auto k = served[static_cast<std::size_t>(a)];
            const double g = chan.large_scale(i, k);
            est.h_hat(i, k) = g * (y.row(i) * v.col(a)).value();
            est.mse(i, k) = err_cov(a, a).real() + g * g * leakage(a);
        }

        for (auto k : served)
            in_set[k] = 0;
    }
    return est;
}

Eigen::VectorXd interference_variance(const EstimationResult& est, const ChannelRealization& chan,
                                      const std::vector<double>& beta_prime, double p0)
{
    if (static_cast<Eigen::Index>(beta_prime.size()) != chan.n_user())
        throw ConsistencyError("interference_variance: beta' size differs from user count");
    Eigen::VectorXd sigma2(chan.n_rrh());
    for (Eigen::Index i = 0; i < chan.n_rrh(); ++i) {
        double acc = 0.0;
        for (Eigen::Index k = 0; k < chan.n_user(); ++k) {
            const double g = chan.large_scale(i, k);
            acc += g * g * beta_prime[static_cast<std::size_t>(k)] * p0 * est.mse(i, k);
        }
        sigma2(i) = acc + est.noise_power;
    }
    return sigma2;
}

double log_det_hpd(const Eigen::MatrixXcd& m)
{
    Eigen::LLT<Eigen::MatrixXcd> llt(m);
    if (llt.info() != Eigen::Success)
        throw ConsistencyError("log_det_hpd: matrix is not positive definite");
    double acc = 0.0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index d = 0; d < l.rows(); ++d)
        acc += std::log(l(d, d).real());
    return 2.0 * acc;
}

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

} // namespace

double throughput_lower_bound(const EstimationResult& est, const ChannelRealization& chan, double alpha,
                              const std::vector<double>& beta_prime, double p0)
{
    return throughput_lower_bound(est, chan, alpha, beta_prime, p0,
                                  interference_variance(est, chan, beta_prime, p0));
}

double throughput_lower_bound(const EstimationResult& est, const ChannelRealization& chan, double alpha,
                              const std::vector<double>& beta_prime, double p0, const Eigen::VectorXd& sigma2)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError("throughput_lower_bound: alpha must lie in (0, 1)");
    const Eigen::Index n = chan.n_rrh();
    const Eigen::Index k_count = chan.n_user();
    if (static_cast<Eigen::Index>(beta_prime.size()) != k_count || sigma2.size() != n)
        throw ConsistencyError("throughput_lower_bound: size mismatch");

    // B = R_V^-1/2 H R_X^1/2; log det(I + B B^H) splits over the connected
    // components of B's bipartite support.
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, k_count);
    DisjointSets sets(static_cast<std::size_t>(n + k_count));
    for (Eigen::Index i = 0; i < n; ++i) {
        const double row_scale = 1.0 / std::sqrt(sigma2(i));
        for (Eigen::Index k = 0; k < k_count; ++k) {
            const double power = beta_prime[static_cast<std::size_t>(k)] * p0;
            const std::complex<double> h = est.h_hat(i, k) * chan.large_scale(i, k);
            if (h == 0.0 || power <= 0.0)
                continue;
            b(i, k) = h * (row_scale * std::sqrt(power));
            sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(n + k));
        }
    }

    std::vector<std::vector<Eigen::Index>> comp_rows(static_cast<std::size_t>(n + k_count));
    std::vector<std::vector<Eigen::Index>> comp_cols(static_cast<std::size_t>(n + k_count));
    for (Eigen::Index i = 0; i < n; ++i)
        comp_rows[sets.find(static_cast<std::size_t>(i))].push_back(i);
    for (Eigen::Index k = 0; k < k_count; ++k)
        comp_cols[sets.find(static_cast<std::size_t>(n + k))].push_back(k);

    double total = 0.0;
    for (std::size_t c = 0; c < comp_rows.size(); ++c) {
        const auto& rows = comp_rows[c];
        const auto& cols = comp_cols[c];
        if (rows.empty() || cols.empty())
            continue;
        const auto r = static_cast<Eigen::Index>(rows.size());
        const auto q = static_cast<Eigen::Index>(cols.size());
        Eigen::MatrixXcd sub(r, q);
        for (Eigen::Index a = 0; a < r; ++a)
            for (Eigen::Index e = 0; e < q; ++e)
                sub(a, e) = b(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(e)]);
        // det(I_r + S S^H) = det(I_q + S^H S); factor the smaller side.
        Eigen::MatrixXcd gram;
        if (r <= q) {
            gram = sub * sub.adjoint();
            gram.diagonal().array() += 1.0;
        } else {
            gram = sub.adjoint() * sub;
            gram.diagonal().array() += 1.0;
        }
        total += log_det_hpd(gram);
    }
    return (1.0 - alpha) * total;
}

std::vector<double> data_power_coefficients(const std::vector<double>& beta, double alpha)
{
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw ParameterError("data_power_coefficients: alpha must lie in [0, 1)");
    std::vector<double> out(beta.size());
    for (std::size_t k = 0; k < beta.size(); ++k)
        out[k] = (1.0 - alpha * beta[k]) / (1.0 - alpha);
    return out;
}

} // namespace cranpilot
