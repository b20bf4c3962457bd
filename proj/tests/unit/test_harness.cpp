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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "cranpilot/error.hpp"
#include "cranpilot/harness/baselines.hpp"
#include "cranpilot/harness/config.hpp"
#include "cranpilot/harness/experiments.hpp"
#include "cranpilot/pilots.hpp"

using namespace cranpilot;
using namespace cranpilot::harness;

namespace {

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "cranpilot_unit";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(const std::string& args)
{
    const std::string cmd = std::string(CRANPILOT_CLI_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

const ResultRow* find(const std::vector<ResultRow>& rows, const std::string& scheme, const std::string& metric)
{
    for (const auto& r : rows)
        if (r.scheme == scheme && r.metric == metric)
            return &r;
    return nullptr;
}

} // namespace

TEST_CASE("random pilots: exact energy and nonzero correlation")
{
    const std::vector<double> beta{1.0, 0.5, 2.0, 0.0};
    const auto book = baseline_random_pilots(6, 4, beta, 1.5, 3);
    CHECK(book.training_length == 6);
    CHECK_FALSE(book.structured());
    for (Eigen::Index k = 0; k < 4; ++k)
        CHECK(book.pilots.row(k).squaredNorm() == doctest::Approx(6 * beta[k] * 1.5).epsilon(1e-13));
    CHECK(std::abs((book.pilots.row(0) * book.pilots.row(1).adjoint()).value()) > 0.0);
    CHECK_THROWS_AS(baseline_random_pilots(0, 4, beta, 1.0, 1), ParameterError);
}

TEST_CASE("random pilots: normalized cross-correlation decays like 1/length")
{
    // E|x_a x_b^H|^2 / (|x_a|^2 |x_b|^2) = 1 / L for independent isotropic rows.
    for (int length : {4, 16, 64}) {
        double acc = 0.0;
        const int draws = 400;
        for (int s = 0; s < draws; ++s) {
            const auto book = baseline_random_pilots(length, 2, unit_betas(2), 1.0, 1000 + s);
            const double c = std::norm((book.pilots.row(0) * book.pilots.row(1).adjoint()).value());
            acc += c / (book.pilots.row(0).squaredNorm() * book.pilots.row(1).squaredNorm());
        }
        const double mean = acc / draws;
        CHECK(mean * length == doctest::Approx(1.0).epsilon(0.2));
    }
}

TEST_CASE("global orthogonal baseline")
{
    const auto plan = baseline_global_orthogonal(100, 1000, 5);
    CHECK(plan.active.size() == 50);
    CHECK(plan.book.training_length == 50);
    std::set<Index> active(plan.active.begin(), plan.active.end());
    CHECK(active.size() == 50);
    for (std::size_t k = 0; k < 1000; ++k) {
        if (active.count(static_cast<Index>(k)))
            CHECK(plan.book.pilots.row(k).squaredNorm() == doctest::Approx(50.0));
        else
            CHECK(plan.book.pilots.row(k).squaredNorm() == 0.0);
    }
    for (auto a : plan.active)
        for (auto b : plan.active)
            if (a != b)
                REQUIRE(std::abs((plan.book.pilots.row(a) * plan.book.pilots.row(b).adjoint()).value()) < 1e-10);

    const auto all = baseline_global_orthogonal(100, 50, 5);
    CHECK(all.active.size() == 50);
    const auto few = baseline_global_orthogonal(100, 20, 5);
    CHECK(few.active.size() == 20);
    CHECK(few.book.training_length == 20);
    CHECK_THROWS_AS(baseline_global_orthogonal(99, 100, 1), ParameterError);
}

TEST_CASE("config parsing, canonical form and hash")
{
    std::istringstream in("experiment = sweep-r  # comment\n"
                          "n_rrh = 50\n"
                          "n_user=60\n"
                          "r_grid = 2, 4.5 ,8\n"
                          "snr_db = 0, 50\n"
                          "schemes = proposed, refined\n"
                          "layout_policy = fixed\n"
                          "\n");
    const auto cfg = parse_config(in);
    CHECK(cfg.kind == ExperimentKind::sweep_r);
    CHECK(cfg.n_rrh == 50);
    CHECK(cfg.n_user == 60);
    CHECK(cfg.r_grid == std::vector<double>{2.0, 4.5, 8.0});
    CHECK(cfg.schemes == std::vector<Scheme>{Scheme::proposed, Scheme::refined});
    CHECK(cfg.layout_policy == LayoutPolicy::fixed);

    std::istringstream again(cfg.canonical());
    const auto round = parse_config(again);
    CHECK(round.canonical() == cfg.canonical());
    CHECK(round.hash() == cfg.hash());
    CHECK(cfg.hash().size() == 16);

    auto other = cfg;
    other.workers = 8;
    CHECK(other.hash() == cfg.hash());
    other.seed = 99;
    CHECK(other.hash() != cfg.hash());
}

TEST_CASE("config errors")
{
    std::istringstream unknown("bogus = 1\n");
    CHECK_THROWS_AS(parse_config(unknown), ParameterError);
    std::istringstream bad_number("r = abc\n");
    CHECK_THROWS_AS(parse_config(bad_number), ParameterError);
    std::istringstream no_eq("n_rrh 5\n");
    CHECK_THROWS_AS(parse_config(no_eq), ParameterError);
    CHECK_THROWS_AS(load_config("/nonexistent/cfg.txt"), IoError);

    ExperimentConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), ParameterError);
    cfg = {};
    cfg.snr_db.clear();
    CHECK_THROWS_AS(cfg.validate(), ParameterError);
    cfg = {};
    cfg.schemes = {Scheme::global_orthogonal};
    cfg.coherence = 101;
    CHECK_THROWS_AS(cfg.validate(), ParameterError);
}

TEST_CASE("emit_csv contracts")
{
    ResultRow row;
    row.experiment = "compare";
    row.scheme = "proposed";
    row.k = 3;
    row.n = 2;
    row.r0 = 100;
    row.r = 2.5;
    row.coherence = 100;
    row.eta = 3.5;
    row.snr_db = 20.0;
    row.trials = 1;
    row.metric = "throughput_bits";
    row.value = 1.25;
    row.seed = 1;
    row.config_hash = "0123456789abcdef";

    const auto a = scratch("one.csv"), b = scratch("two.csv");
    emit_csv({row}, a.string());
    emit_csv({row}, b.string());
    const auto text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(text == std::string(csv_header) +
                      "\ncompare,proposed,3,2,100,2.5,100,3.5,20,1,throughput_bits,1.25,0,1,0123456789abcdef\n");

    CHECK_THROWS_AS(emit_csv({}, a.string()), ConsistencyError);
    CHECK_THROWS_AS(emit_csv({row}, "/nonexistent-dir/x.csv"), IoError);
    row.value = std::nan("");
    CHECK_THROWS_AS(emit_csv({row}, a.string()), ConsistencyError);
}

TEST_CASE("scaling with two users stays within two colors")
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::scaling;
    cfg.n_rrh = 10;
    cfg.n_user = 2;
    cfg.trials = 1;
    cfg.rho = 0.5;
    const auto rows = run_scaling(cfg);
    CHECK(find(rows, "G", "colors")->value <= 2.0);
    CHECK(find(rows, "G_inf", "colors")->value <= 2.0);
    CHECK(find(rows, "bound", "chromatic_scaling_bound")->value == doctest::Approx(8.62214081400201007));
    CHECK(find(rows, "dsatur", "degree_bound_violations")->value == 0.0);
}

TEST_CASE("density: tiny r puts all mass at zero")
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::density;
    cfg.n_rrh = 20;
    cfg.n_user = 20;
    cfg.r = 1e-9;
    cfg.trials = 3;
    const auto rows = run_density(cfg);
    CHECK(find(rows, "proposed", "users_per_rrh_pmf_0")->value == 1.0);
    CHECK(find(rows, "proposed", "users_per_rrh_pmf_1") == nullptr);
}

TEST_CASE("density: single central RRH with every user in range")
{
    // r exceeds the side, so every user is served by every RRH.
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::density;
    cfg.n_rrh = 1;
    cfg.n_user = 7;
    cfg.side = 10.0;
    cfg.r = 20.0;
    cfg.trials = 2;
    const auto rows = run_density(cfg);
    CHECK(find(rows, "proposed", "users_per_rrh_pmf_7")->value == 1.0);
    CHECK(find(rows, "proposed", "users_per_rrh_pmf_3")->value == 0.0);
    CHECK(find(rows, "proposed", "average_colors")->value == 7.0);
}

TEST_CASE("density: mean users per RRH matches the boundary-corrected expectation")
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::density;
    cfg.n_rrh = 200;
    cfg.n_user = 1000;
    cfg.rho = 0.5;
    cfg.trials = 30;
    const auto rows = run_density(cfg);
    const auto* mean = find(rows, "proposed", "mean_users_per_rrh");
    const auto* expected = find(rows, "analytic", "expected_users_per_rrh");
    const auto* interior = find(rows, "analytic", "interior_mean_users_per_rrh");
    const double r = mean->r;
    CHECK(interior->value == doctest::Approx(4.0 * r * r * 0.1));
    CHECK(std::abs(mean->value - expected->value) < 3.0 * mean->stderr_);
    CHECK(mean->value < interior->value);
}

TEST_CASE("compare: very low SNR drives every scheme to zero")
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::compare;
    cfg.n_rrh = 20;
    cfg.n_user = 20;
    cfg.snr_db = {-200.0};
    cfg.trials = 2;
    cfg.schemes = {Scheme::proposed, Scheme::refined, Scheme::random_pilot, Scheme::global_orthogonal};
    for (const auto& row : run_compare(cfg))
        if (row.metric == "throughput_bits")
            CHECK(std::abs(row.value) < 1e-9);
}

TEST_CASE("sweep-k: a single user gets a small positive rate")
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::sweep_k;
    cfg.n_rrh = 50;
    cfg.k_grid = {1};
    cfg.r = 30.0;
    cfg.trials = 5;
    const auto rows = run_sweep_k(cfg);
    const auto* row = find(rows, "proposed", "throughput_bits");
    CHECK(row->value > 0.0);
    CHECK(find(rows, "proposed", "training_length")->value == 1.0);
}

TEST_CASE("sweep-r: tiny r gives low rate, huge r is infeasible")
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::sweep_r;
    cfg.n_rrh = 30;
    cfg.n_user = 40;
    cfg.coherence = 10;
    cfg.r_grid = {0.01, 5.0, 200.0};
    cfg.trials = 3;
    const auto rows = run_sweep_r(cfg);
    std::vector<double> rates;
    bool infeasible = false;
    for (const auto& row : rows) {
        if (row.metric == "throughput_bits")
            rates.push_back(row.value);
        if (row.metric == "infeasible") {
            infeasible = true;
            CHECK(row.r == 200.0);
            CHECK(row.value == 40.0);
        }
    }
    REQUIRE(rates.size() == 2);
    CHECK(rates[0] < rates[1]);
    CHECK(infeasible);
}

TEST_CASE("compare propagates infeasible training")
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::compare;
    cfg.n_rrh = 10;
    cfg.n_user = 30;
    cfg.r = 500.0;
    cfg.coherence = 10;
    cfg.trials = 1;
    CHECK_THROWS_AS(run_compare(cfg), InfeasibleTrainingError);
}

TEST_CASE("CLI exit codes and overrides")
{
    const auto cfg_path = scratch("cli.cfg");
    {
        std::ofstream out(cfg_path);
        out << "n_rrh = 20\nn_user = 20\ntrials = 2\nschemes = proposed, random-pilot\n";
    }
    const auto csv = scratch("cli.csv");
    CHECK(cli("compare --config " + cfg_path.string() + " --out " + csv.string()) == 0);
    const auto text = slurp(csv);
    CHECK(text.rfind(csv_header, 0) == 0);
    CHECK(text.find(",2,throughput_bits,") != std::string::npos);

    CHECK(cli("compare --config " + cfg_path.string() + " --out " + csv.string() + " --trials 3 --seed 9") == 0);
    CHECK(slurp(csv).find(",3,throughput_bits,") != std::string::npos);
    CHECK(slurp(csv).find(",9,") != std::string::npos);

    CHECK(cli("compare --config " + cfg_path.string() + " --out " + csv.string() + " --trials 0") == 1);
    CHECK(cli("compare --config " + cfg_path.string() + " --out /nonexistent-dir/x.csv") == 3);
    CHECK(cli("bogus") == 1);

    const auto bad_cfg = scratch("bad.cfg");
    {
        std::ofstream out(bad_cfg);
        out << "n_rrh = 10\nn_user = 30\nr = 500\ncoherence = 10\ntrials = 1\n";
    }
    CHECK(cli("compare --config " + bad_cfg.string() + " --out " + csv.string()) == 2);
    CHECK(cli("sweep-k --config " + bad_cfg.string() + " --out " + csv.string()) == 2);

    const auto edges = scratch("edges.txt"), colors = scratch("colors.txt");
    CHECK(cli("graph --rrhs 5 --users 12 --r 20 --edges " + edges.string() + " --coloring " + colors.string()) == 0);
    CHECK(!slurp(edges).empty());
}

TEST_CASE("shipped configs parse and validate")
{
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(CRANPILOT_CONFIG_DIR)) {
        if (entry.path().extension() != ".cfg")
            continue;
        const auto cfg = load_config(entry.path().string());
        CHECK_NOTHROW(cfg.validate());
        CHECK(std::string(to_string(cfg.kind)) == [&] {
            auto stem = entry.path().stem().string();
            std::replace(stem.begin(), stem.end(), '_', '-');
            return stem;
        }());
        ++count;
    }
    CHECK(count == 5);
}
