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

#include "cranpilot/harness/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "cranpilot/asymptotics.hpp"
#include "cranpilot/error.hpp"
#include "cranpilot/format.hpp"

namespace cranpilot::harness {

std::string_view to_string(ExperimentKind kind) noexcept
{
    switch (kind) {
    case ExperimentKind::scaling:
        return "scaling";
    case ExperimentKind::density:
        return "density";
    case ExperimentKind::compare:
        return "compare";
    case ExperimentKind::sweep_k:
        return "sweep-k";
    case ExperimentKind::sweep_r:
        return "sweep-r";
    }
    return "unknown";
}

ExperimentKind parse_experiment(std::string_view name)
{
    for (auto kind : {ExperimentKind::scaling, ExperimentKind::density, ExperimentKind::compare,
                      ExperimentKind::sweep_k, ExperimentKind::sweep_r})
        if (name == to_string(kind))
            return kind;
    throw ParameterError("unknown experiment '" + std::string(name) + "'");
}

std::vector<std::size_t> ExperimentConfig::users_grid() const
{
    return k_grid.empty() ? std::vector<std::size_t>{n_user} : k_grid;
}

std::vector<double> ExperimentConfig::threshold_grid() const
{
    return r_grid.empty() ? std::vector<double>{r} : r_grid;
}

double ExperimentConfig::threshold_for(std::size_t k) const
{
    if (!rho)
        return r;
    const double density = static_cast<double>(k) / (side * side);
    return asymptotics::radius_for_rho(static_cast<double>(k), density, *rho);
}

void ExperimentConfig::validate() const
{
    if (n_rrh < 1 || n_user < 1)
        throw ParameterError("config: n_rrh and n_user must be at least 1");
    for (auto k : k_grid)
        if (k < 1)
            throw ParameterError("config: k_grid entries must be at least 1");
    if (!(side > 0.0))
        throw ParameterError("config: side must be positive");
    if (!(r > 0.0))
        throw ParameterError("config: r must be positive");
    for (double v : r_grid)
        if (!(v > 0.0))
            throw ParameterError("config: r_grid entries must be positive");
    if (rho && !(*rho > 0.0))
        throw ParameterError("config: rho must be positive");
    if (rho)
        for (auto k : users_grid())
            if (k < 2)
                throw ParameterError("config: rho-derived thresholds need at least 2 users");
    if (coherence < 2)
        throw ParameterError("config: coherence must be at least 2");
    if (!(eta > 0.0))
        throw ParameterError("config: eta must be positive");
    if (snr_db.empty())
        throw ParameterError("config: snr_db must list at least one value");
    if (!(beta >= 0.0) || !(p0 > 0.0))
        throw ParameterError("config: beta must be >= 0 and p0 > 0");
    if (!(min_distance > 0.0))
        throw ParameterError("config: min_distance must be positive");
    if (trials < 1)
        throw ParameterError("config: trials must be at least 1");
    if (schemes.empty())
        throw ParameterError("config: schemes must list at least one scheme");
    if (workers < 1)
        throw ParameterError("config: workers must be at least 1");
    for (Scheme s : schemes)
        if (s == Scheme::global_orthogonal && coherence % 2 != 0)
            throw ParameterError("config: the global-orthogonal scheme needs an even coherence time");
}

namespace {

template <typename T, typename Fmt>
std::string join(const std::vector<T>& values, Fmt fmt)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += fmt(values[i]);
    }
    return out;
}

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value)
{
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto t = trim(item);
        if (!t.empty())
            out.push_back(std::move(t));
    }
    return out;
}

double to_double(const std::string& key, const std::string& text)
{
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw ParameterError("config: '" + key + "' expects a number, got '" + text + "'");
    return value;
}

template <typename Int>
Int to_integer(const std::string& key, const std::string& text)
{
    Int value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw ParameterError("config: '" + key + "' expects an integer, got '" + text + "'");
    return value;
}

} // namespace

std::string ExperimentConfig::canonical() const
{
    auto num = [](double v) { return format_number(v); };
    auto integer = [](std::size_t v) { return std::to_string(v); };
    auto scheme = [](Scheme s) { return std::string(cranpilot::to_string(s)); };

    std::ostringstream out;
    out << "experiment = " << to_string(kind) << '\n'
        << "n_rrh = " << n_rrh << '\n'
        << "n_user = " << n_user << '\n'
        << "k_grid = " << join(k_grid, integer) << '\n'
        << "side = " << num(side) << '\n'
        << "r = " << num(r) << '\n'
        << "r_grid = " << join(r_grid, num) << '\n'
        << "rho = " << (rho ? num(*rho) : std::string()) << '\n'
        << "coherence = " << coherence << '\n'
        << "eta = " << num(eta) << '\n'
        << "snr_db = " << join(snr_db, num) << '\n'
        << "beta = " << num(beta) << '\n'
        << "p0 = " << num(p0) << '\n'
        << "min_distance = " << num(min_distance) << '\n'
        << "trials = " << trials << '\n'
        << "seed = " << seed << '\n'
        << "layout_policy = " << cranpilot::to_string(layout_policy) << '\n'
        << "schemes = " << join(schemes, scheme) << '\n';
    return out.str();
}

std::string ExperimentConfig::hash() const
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExperimentConfig parse_config(std::istream& in)
{
    ExperimentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        const auto body = trim(line);
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParameterError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const auto key = trim(std::string_view(body).substr(0, eq));
        const auto value = trim(std::string_view(body).substr(eq + 1));

        if (key == "experiment") {
            cfg.kind = parse_experiment(value);
        } else if (key == "n_rrh") {
            cfg.n_rrh = to_integer<std::size_t>(key, value);
        } else if (key == "n_user") {
            cfg.n_user = to_integer<std::size_t>(key, value);
        } else if (key == "k_grid") {
            cfg.k_grid.clear();
            for (const auto& item : split_list(value))
                cfg.k_grid.push_back(to_integer<std::size_t>(key, item));
        } else if (key == "side") {
            cfg.side = to_double(key, value);
        } else if (key == "r") {
            cfg.r = to_double(key, value);
        } else if (key == "r_grid") {
            cfg.r_grid.clear();
            for (const auto& item : split_list(value))
                cfg.r_grid.push_back(to_double(key, item));
        } else if (key == "rho") {
            if (value.empty())
                cfg.rho.reset();
            else
                cfg.rho = to_double(key, value);
        } else if (key == "coherence") {
            cfg.coherence = to_integer<int>(key, value);
        } else if (key == "eta") {
            cfg.eta = to_double(key, value);
        } else if (key == "snr_db") {
            cfg.snr_db.clear();
            for (const auto& item : split_list(value))
                cfg.snr_db.push_back(to_double(key, item));
        } else if (key == "beta") {
            cfg.beta = to_double(key, value);
        } else if (key == "p0") {
            cfg.p0 = to_double(key, value);
        } else if (key == "min_distance") {
            cfg.min_distance = to_double(key, value);
        } else if (key == "trials") {
            cfg.trials = to_integer<int>(key, value);
        } else if (key == "seed") {
            cfg.seed = to_integer<std::uint64_t>(key, value);
        } else if (key == "layout_policy") {
            cfg.layout_policy = parse_layout_policy(value);
        } else if (key == "schemes") {
            cfg.schemes.clear();
            for (const auto& item : split_list(value))
                cfg.schemes.push_back(parse_scheme(item));
        } else if (key == "workers") {
            cfg.workers = to_integer<int>(key, value);
        } else {
            throw ParameterError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    return parse_config(in);
}

} // namespace cranpilot::harness
