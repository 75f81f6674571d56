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

#ifndef IRSPA_SCENARIO_HPP
#define IRSPA_SCENARIO_HPP

#include <armadillo>
#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

namespace irspa
{
    using Position = std::array<double, 3>; // Cartesian coordinates in meters

    /// Converts a power level in dBm to watts.
    double dbm_to_watt(double dbm);
    double watt_to_dbm(double watt);

    /// Static description of a single-user link aided by an active IRS.
    ///
    /// Defaults reproduce the reference geometry: BS at the origin, IRS at
    /// [200, 0, 35] m, user at [100, 50, 0] m, -100 dBm noise at both the IRS
    /// and the user, and a 30 dBm total power budget shared by BS and IRS.
    struct Scenario
    {
        Position bs_position = {0.0, 0.0, 0.0};
        Position irs_position = {200.0, 0.0, 35.0};
        Position user_position = {100.0, 50.0, 0.0};

        unsigned num_bs_antennas = 1;   // M
        unsigned num_irs_elements = 64; // N

        double total_power = 1.0;        // P [W]
        double irs_noise_power = 1e-13;  // sigma_I^2 [W]
        double user_noise_power = 1e-13; // sigma_n^2 [W]

        double pathloss_exponent_bs_irs = 2.3;
        double pathloss_exponent_irs_user = 2.3;
        double pathloss_exponent_bs_user = 2.5;
        double reference_gain_db = -30.0; // path gain at 1 m

        /// Throws std::invalid_argument if any field violates its constraint.
        void validate() const;

        /// Deterministic 64-bit fingerprint of all fields (FNV-1a over a canonical text form).
        std::uint64_t fingerprint() const;
    };

    /// Builds a scenario from a JSON object. Missing keys keep their defaults,
    /// unknown keys are rejected. Powers are given in dBm, e.g. "total_power_dbm".
    Scenario scenario_from_json(const nlohmann::json &j);
    nlohmann::json scenario_to_json(const Scenario &s);

    /// Reads and validates a scenario config file (JSON). Throws std::runtime_error on I/O or parse errors.
    Scenario load_scenario(const std::string &path);

    double distance(const Position &p1, const Position &p2);

    /// Log-distance law: gain = 10^(reference_gain_db/10) * d^(-exponent). Requires d >= 1 m.
    double pathloss_gain(double d, double exponent, double reference_gain_db = -30.0);

    /// One Rayleigh draw of the three links.
    ///   H_si: N x M, BS -> IRS
    ///   g:    N,     IRS -> user (the link row is g^H)
    ///   h:    M,     BS -> user (the link row is h^H)
    struct ChannelRealization
    {
        arma::cx_mat H_si;
        arma::cx_vec g;
        arma::cx_vec h;
        std::uint64_t seed_used = 0;
    };

    /// Draws i.i.d. CN(0, gain) entries per link. Identical (scenario, seed) give bit-identical output.
    ChannelRealization generate_channels(const Scenario &scenario, std::uint64_t seed);

    /// SplitMix64 finalizer.
    std::uint64_t mix64(std::uint64_t x);

    /// Seed of trial `trial` under master seed `master`; independent of execution order.
    std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);
}

#endif
