// SPDX-License-Identifier: Apache-2.0
//
// irspa - power allocation for active IRS-aided wireless links
// Copyright (C) 2026 The irspa Authors
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


#include "irspa/scenario.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

using namespace irspa;
using Catch::Approx;

TEST_CASE("distance between reference nodes", "[scenario]")
{
    const Scenario s;
    CHECK(distance({0, 0, 0}, {0, 0, 0}) == 0.0);
    CHECK(distance(s.bs_position, s.irs_position) == Approx(std::sqrt(41225.0)).epsilon(1e-14));
    CHECK(distance(s.bs_position, s.irs_position) == Approx(203.0394).margin(5e-5));
    CHECK(distance(s.bs_position, s.user_position) == Approx(111.8034).margin(5e-5));
}

TEST_CASE("path-loss law", "[scenario]")
{
    CHECK(pathloss_gain(1.0, 2.3) == Approx(1e-3).epsilon(1e-14));
    CHECK(pathloss_gain(1.0, 7.0) == Approx(1e-3).epsilon(1e-14));
    CHECK(pathloss_gain(100.0, 2.5) == Approx(1e-8).epsilon(1e-12));
    CHECK(pathloss_gain(200.0, 2.3) / pathloss_gain(100.0, 2.3) == Approx(std::pow(2.0, -2.3)).epsilon(1e-13));
    CHECK(pathloss_gain(200.0, 2.3) / pathloss_gain(100.0, 2.3) == Approx(0.2031).margin(5e-5));
    CHECK_THROWS_AS(pathloss_gain(0.5, 2.0), std::invalid_argument);

    SECTION("strictly decreasing in distance and exponent")
    {
        for (double d = 1.5; d < 1000.0; d *= 1.7)
        {
            CHECK(pathloss_gain(d * 1.01, 2.3) < pathloss_gain(d, 2.3));
            CHECK(pathloss_gain(d, 2.4) < pathloss_gain(d, 2.3));
        }
    }
}

TEST_CASE("dBm conversion", "[scenario]")
{
    CHECK(dbm_to_watt(30.0) == Approx(1.0));
    CHECK(dbm_to_watt(-100.0) == Approx(1e-13));
    CHECK(watt_to_dbm(dbm_to_watt(17.25)) == Approx(17.25).epsilon(1e-14));
}

TEST_CASE("channel generation is a pure function of scenario and seed", "[scenario]")
{
    Scenario s;
    s.num_bs_antennas = 3;
    s.num_irs_elements = 17;
    const auto a = generate_channels(s, 42);
    const auto b = generate_channels(s, 42);
    const auto c = generate_channels(s, 43);
    REQUIRE(a.H_si.n_rows == 17);
    REQUIRE(a.H_si.n_cols == 3);
    REQUIRE(a.g.n_elem == 17);
    REQUIRE(a.h.n_elem == 3);
    CHECK(arma::approx_equal(a.H_si, b.H_si, "absdiff", 0.0));
    CHECK(arma::approx_equal(a.g, b.g, "absdiff", 0.0));
    CHECK(arma::approx_equal(a.h, b.h, "absdiff", 0.0));
    CHECK_FALSE(arma::approx_equal(a.h, c.h, "absdiff", 0.0));
    CHECK(a.seed_used == 42);
}

TEST_CASE("second moments follow the path-loss law", "[scenario]")
{
    Scenario s;
    s.num_irs_elements = 1;
    const double expect_h = pathloss_gain(distance(s.bs_position, s.user_position), s.pathloss_exponent_bs_user);
    const double expect_H = pathloss_gain(distance(s.bs_position, s.irs_position), s.pathloss_exponent_bs_irs);
    const double expect_g = pathloss_gain(distance(s.irs_position, s.user_position), s.pathloss_exponent_irs_user);

    const std::size_t draws = 100000;
    double sum_h = 0.0, sum_H = 0.0, sum_g = 0.0;
    for (std::size_t t = 0; t < draws; ++t)
    {
        const auto ch = generate_channels(s, trial_seed(7, t));
        sum_h += std::norm(ch.h(0));
        sum_H += std::norm(ch.H_si(0, 0));
        sum_g += std::norm(ch.g(0));
    }
    CHECK(sum_h / draws == Approx(expect_h).epsilon(0.02));
    CHECK(sum_H / draws == Approx(expect_H).epsilon(0.02));
    CHECK(sum_g / draws == Approx(expect_g).epsilon(0.02));
}

TEST_CASE("trial seeds are distinct", "[scenario]")
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t t = 0; t < 10000; ++t)
        seen.insert(trial_seed(1, t));
    CHECK(seen.size() == 10000);
    CHECK(trial_seed(1, 5) != trial_seed(2, 5));
}

TEST_CASE("scenario validation", "[scenario]")
{
    Scenario s;
    CHECK_NOTHROW(s.validate());
    s.num_irs_elements = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = Scenario{};
    s.total_power = 0.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = Scenario{};
    s.user_position = s.bs_position;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = Scenario{};
    s.irs_noise_power = std::nan("");
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("scenario JSON", "[scenario]")
{
    SECTION("round trip")
    {
        Scenario s;
        s.num_bs_antennas = 4;
        s.num_irs_elements = 128;
        s.total_power = dbm_to_watt(25.0);
        s.reference_gain_db = -35.0;
        const Scenario r = scenario_from_json(scenario_to_json(s));
        CHECK(r.num_bs_antennas == 4);
        CHECK(r.num_irs_elements == 128);
        CHECK(r.total_power == Approx(s.total_power).epsilon(1e-14));
        CHECK(r.reference_gain_db == -35.0);
        CHECK(r.fingerprint() == scenario_from_json(scenario_to_json(r)).fingerprint());
    }
    SECTION("missing keys keep defaults")
    {
        const Scenario r = scenario_from_json(nlohmann::json::parse(R"({"num_irs_elements": 8})"));
        CHECK(r.num_irs_elements == 8);
        CHECK(r.fingerprint() != Scenario{}.fingerprint());
        CHECK(scenario_from_json(nlohmann::json::object()).fingerprint() == Scenario{}.fingerprint());
    }
    SECTION("rejections")
    {
        CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"bogus": 1})")), std::invalid_argument);
        CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"num_irs_elements": 0})")), std::invalid_argument);
        CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"num_irs_elements": 2.5})")), std::invalid_argument);
        CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"irs_position": [1, 2]})")), std::invalid_argument);
        CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"total_power_dbm": "high"})")), std::invalid_argument);
        CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse("[1, 2]")), std::invalid_argument);
    }
    SECTION("files")
    {
        const std::string path = "test_scenario_config.json";
        {
            std::ofstream out(path);
            out << R"({"scenario": {"num_irs_elements": 32}, "experiment": {"trials": 5}})";
        }
        CHECK(load_scenario(path).num_irs_elements == 32);
        {
            std::ofstream out(path);
            out << "{ not json";
        }
        CHECK_THROWS_AS(load_scenario(path), std::runtime_error);
        CHECK_THROWS_AS(load_scenario("does/not/exist.json"), std::runtime_error);
        std::remove(path.c_str());
    }
}
