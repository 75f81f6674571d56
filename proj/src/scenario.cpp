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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

namespace irspa
{
    double dbm_to_watt(double dbm)
    {
        return std::pow(10.0, (dbm - 30.0) / 10.0);
    }

    double watt_to_dbm(double watt)
    {
        return 10.0 * std::log10(watt) + 30.0;
    }

    double distance(const Position &p1, const Position &p2)
    {
        const double dx = p1[0] - p2[0];
        const double dy = p1[1] - p2[1];
        const double dz = p1[2] - p2[2];
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }

    double pathloss_gain(double d, double exponent, double reference_gain_db)
    {
        if (!(d >= 1.0))
            throw std::invalid_argument("pathloss_gain: distance must be at least the 1 m reference distance");
        return std::pow(10.0, reference_gain_db / 10.0) * std::pow(d, -exponent);
    }

    void Scenario::validate() const
    {
        if (num_bs_antennas < 1)
            throw std::invalid_argument("Scenario: num_bs_antennas must be >= 1");
        if (num_irs_elements < 1)
            throw std::invalid_argument("Scenario: num_irs_elements must be >= 1");
        if (!(total_power > 0.0) || !std::isfinite(total_power))
            throw std::invalid_argument("Scenario: total_power must be positive");
        if (!(irs_noise_power > 0.0) || !std::isfinite(irs_noise_power))
            throw std::invalid_argument("Scenario: irs_noise_power must be positive");
        if (!(user_noise_power > 0.0) || !std::isfinite(user_noise_power))
            throw std::invalid_argument("Scenario: user_noise_power must be positive");

        for (const auto *p : {&bs_position, &irs_position, &user_position})
            for (double c : *p)
                if (!std::isfinite(c))
                    throw std::invalid_argument("Scenario: positions must be finite");

        if (!(distance(bs_position, irs_position) > 0.0) ||
            !(distance(irs_position, user_position) > 0.0) ||
            !(distance(bs_position, user_position) > 0.0))
            throw std::invalid_argument("Scenario: node positions must be pairwise distinct");

        for (double a : {pathloss_exponent_bs_irs, pathloss_exponent_irs_user, pathloss_exponent_bs_user, reference_gain_db})
            if (!std::isfinite(a))
                throw std::invalid_argument("Scenario: path-loss parameters must be finite");
    }

    std::uint64_t Scenario::fingerprint() const
    {
        char buf[1024];
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%.17g,%.17g;%.17g,%.17g,%.17g;%.17g,%.17g,%.17g;%u;%u;%.17g;%.17g;%.17g;%.17g;%.17g;%.17g;%.17g",
                      bs_position[0], bs_position[1], bs_position[2],
                      irs_position[0], irs_position[1], irs_position[2],
                      user_position[0], user_position[1], user_position[2],
                      num_bs_antennas, num_irs_elements,
                      total_power, irs_noise_power, user_noise_power,
                      pathloss_exponent_bs_irs, pathloss_exponent_irs_user, pathloss_exponent_bs_user,
                      reference_gain_db);

        std::uint64_t hash = 0xcbf29ce484222325ULL;
        for (const char *c = buf; *c != '\0'; ++c)
        {
            hash ^= static_cast<unsigned char>(*c);
            hash *= 0x100000001b3ULL;
        }
        return hash;
    }

    namespace
    {
        Position read_position(const nlohmann::json &v, const char *key)
        {
            if (!v.is_array() || v.size() != 3)
                throw std::invalid_argument(std::string("Scenario config: '") + key + "' must be an array of 3 numbers");
            Position p{};
            for (std::size_t i = 0; i < 3; ++i)
            {
                if (!v[i].is_number())
                    throw std::invalid_argument(std::string("Scenario config: '") + key + "' must be an array of 3 numbers");
                p[i] = v[i].get<double>();
            }
            return p;
        }

        double read_number(const nlohmann::json &v, const char *key)
        {
            if (!v.is_number())
                throw std::invalid_argument(std::string("Scenario config: '") + key + "' must be a number");
            return v.get<double>();
        }

        unsigned read_count(const nlohmann::json &v, const char *key)
        {
            if (!v.is_number_integer() || v.get<long long>() < 1)
                throw std::invalid_argument(std::string("Scenario config: '") + key + "' must be a positive integer");
            return v.get<unsigned>();
        }
    }

    Scenario scenario_from_json(const nlohmann::json &j)
    {
        if (!j.is_object())
            throw std::invalid_argument("Scenario config: expected a JSON object");

        Scenario s;
        for (const auto &[key, value] : j.items())
        {
            if (key == "bs_position")
                s.bs_position = read_position(value, "bs_position");
            else if (key == "irs_position")
                s.irs_position = read_position(value, "irs_position");
            else if (key == "user_position")
                s.user_position = read_position(value, "user_position");
            else if (key == "num_bs_antennas")
                s.num_bs_antennas = read_count(value, "num_bs_antennas");
            else if (key == "num_irs_elements")
                s.num_irs_elements = read_count(value, "num_irs_elements");
            else if (key == "total_power_dbm")
                s.total_power = dbm_to_watt(read_number(value, "total_power_dbm"));
            else if (key == "irs_noise_power_dbm")
                s.irs_noise_power = dbm_to_watt(read_number(value, "irs_noise_power_dbm"));
            else if (key == "user_noise_power_dbm")
                s.user_noise_power = dbm_to_watt(read_number(value, "user_noise_power_dbm"));
            else if (key == "pathloss_exponent_bs_irs")
                s.pathloss_exponent_bs_irs = read_number(value, "pathloss_exponent_bs_irs");
            else if (key == "pathloss_exponent_irs_user")
                s.pathloss_exponent_irs_user = read_number(value, "pathloss_exponent_irs_user");
            else if (key == "pathloss_exponent_bs_user")
                s.pathloss_exponent_bs_user = read_number(value, "pathloss_exponent_bs_user");
            else if (key == "reference_gain_db")
                s.reference_gain_db = read_number(value, "reference_gain_db");
            else
                throw std::invalid_argument("Scenario config: unknown key '" + key + "'");
        }
        s.validate();
        return s;
    }

    nlohmann::json scenario_to_json(const Scenario &s)
    {
        return nlohmann::json{
            {"bs_position", s.bs_position},
            {"irs_position", s.irs_position},
            {"user_position", s.user_position},
            {"num_bs_antennas", s.num_bs_antennas},
            {"num_irs_elements", s.num_irs_elements},
            {"total_power_dbm", watt_to_dbm(s.total_power)},
            {"irs_noise_power_dbm", watt_to_dbm(s.irs_noise_power)},
            {"user_noise_power_dbm", watt_to_dbm(s.user_noise_power)},
            {"pathloss_exponent_bs_irs", s.pathloss_exponent_bs_irs},
            {"pathloss_exponent_irs_user", s.pathloss_exponent_irs_user},
            {"pathloss_exponent_bs_user", s.pathloss_exponent_bs_user},
            {"reference_gain_db", s.reference_gain_db}};
    }

    Scenario load_scenario(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("Cannot open scenario config '" + path + "'");
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw std::runtime_error("Malformed scenario config '" + path + "': " + e.what());
        }
        // Experiment settings may share the file; only the scenario section is read here.
        if (j.is_object() && j.contains("scenario"))
            return scenario_from_json(j.at("scenario"));
        return scenario_from_json(j);
    }

    std::uint64_t mix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial)
    {
        return mix64(mix64(master) ^ (trial * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
    }

    ChannelRealization generate_channels(const Scenario &scenario, std::uint64_t seed)
    {
        scenario.validate();
        const arma::uword M = scenario.num_bs_antennas;
        const arma::uword N = scenario.num_irs_elements;

        const double gain_bs_irs = pathloss_gain(distance(scenario.bs_position, scenario.irs_position),
                                                 scenario.pathloss_exponent_bs_irs, scenario.reference_gain_db);
        const double gain_irs_user = pathloss_gain(distance(scenario.irs_position, scenario.user_position),
                                                   scenario.pathloss_exponent_irs_user, scenario.reference_gain_db);
        const double gain_bs_user = pathloss_gain(distance(scenario.bs_position, scenario.user_position),
                                                  scenario.pathloss_exponent_bs_user, scenario.reference_gain_db);

        std::mt19937_64 rng(seed);
        std::normal_distribution<double> unit(0.0, 1.0);

        // Each component carries half of the entry variance.
        auto draw = [&](double gain)
        {
            const double sigma = std::sqrt(0.5 * gain);
            const double re = sigma * unit(rng);
            const double im = sigma * unit(rng);
            return std::complex<double>(re, im);
        };

        ChannelRealization ch;
        ch.seed_used = seed;
        ch.H_si.set_size(N, M);
        for (arma::uword m = 0; m < M; ++m)
            for (arma::uword n = 0; n < N; ++n)
                ch.H_si(n, m) = draw(gain_bs_irs);

        ch.g.set_size(N);
        for (arma::uword n = 0; n < N; ++n)
            ch.g(n) = draw(gain_irs_user);

        ch.h.set_size(M);
        for (arma::uword m = 0; m < M; ++m)
            ch.h(m) = draw(gain_bs_user);

        return ch;
    }
}
