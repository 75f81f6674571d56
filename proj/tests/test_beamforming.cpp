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


#include "irspa/beamforming.hpp"
#include "irspa/objective.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace irspa;
using Catch::Approx;

namespace
{
    double wrapped_phase_gap(double x, double y)
    {
        return std::abs(std::remainder(x - y, 2.0 * std::numbers::pi));
    }

    double best_rate_on_grid(const ObjectiveCoefficients &c)
    {
        double best = 0.0;
        for (int i = 0; i <= 100; ++i)
            best = std::max(best, rate(f_rational(c, i / 100.0)));
        return best;
    }
}

TEST_CASE("MRT vector has unit norm", "[beamforming]")
{
    for (unsigned M : {1u, 2u, 5u})
    {
        Scenario s;
        s.num_bs_antennas = M;
        s.num_irs_elements = 16;
        const auto ch = generate_channels(s, 11 + M);
        const auto design = design_beamforming(ch);
        CHECK(arma::norm(design.v) == Approx(1.0).epsilon(1e-14));
        CHECK(arma::norm(design.theta_tilde) == Approx(1.0).epsilon(1e-14));
        for (const auto &t : design.theta_tilde)
            CHECK(std::abs(t) == Approx(1.0 / 4.0).epsilon(1e-14));
        if (M == 1)
            CHECK(std::abs(design.v(0)) == Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("cascaded terms are phase aligned with the direct link", "[beamforming]")
{
    Scenario s;
    s.num_bs_antennas = 3;
    s.num_irs_elements = 32;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        const auto ch = generate_channels(s, trial_seed(3, seed));
        const auto design = design_beamforming(ch);
        const arma::cx_vec Hv = ch.H_si * design.v;
        const std::complex<double> direct = arma::cdot(ch.h, design.v);
        std::complex<double> cascade = 0.0;
        for (arma::uword n = 0; n < Hv.n_elem; ++n)
        {
            const std::complex<double> term = std::conj(design.theta_tilde(n)) * std::conj(ch.g(n)) * Hv(n);
            CHECK(wrapped_phase_gap(std::arg(term), std::arg(direct)) <= 1e-9);
            cascade += term;
        }
        CHECK(wrapped_phase_gap(std::arg(cascade), std::arg(direct)) <= 1e-9);

        const auto c = compute_coefficients(s, ch, design);
        CHECK(c.e >= 0.0);
        CHECK(c.e == Approx(s.total_power * std::abs(cascade) * std::abs(direct)).epsilon(1e-10));
    }
}

TEST_CASE("null direct link is rejected", "[beamforming]")
{
    Scenario s;
    auto ch = generate_channels(s, 1);
    ch.h.zeros();
    CHECK_THROWS_AS(design_beamforming(ch), std::invalid_argument);
}

TEST_CASE("amplification factor", "[beamforming]")
{
    const RhoInputs in{1.0, 1e-9, 1e-13};
    CHECK(compute_rho(1.0, in) == 0.0);
    CHECK(compute_rho(0.0, in) == Approx(std::sqrt(1.0 / 1e-13)).epsilon(1e-14));
    CHECK(compute_rho(0.5, in) == Approx(std::sqrt(0.5 / (0.5e-9 + 1e-13))).epsilon(1e-14));

    SECTION("IRS output power equals (1 - beta) P")
    {
        for (const RhoInputs &r : {in, RhoInputs{3.5, 2e-7, 1e-12}, RhoInputs{0.01, 1e-14, 1e-13}})
            for (int i = 0; i <= 50; ++i)
            {
                const double beta = i / 50.0;
                const double rho = compute_rho(beta, r);
                const double emitted = beta * r.total_power * rho * rho * r.theta_m_norm2 + r.irs_noise_power * rho * rho;
                CHECK(emitted == Approx((1.0 - beta) * r.total_power).epsilon(1e-9).margin(1e-300));
            }
    }
}

TEST_CASE("random designs are unit norm and reproducible", "[beamforming]")
{
    const auto a = random_design(4, 9, 5);
    const auto b = random_design(4, 9, 5);
    CHECK(arma::norm(a.v) == Approx(1.0).epsilon(1e-14));
    CHECK(arma::norm(a.theta_tilde) == Approx(1.0).epsilon(1e-14));
    CHECK(arma::approx_equal(a.theta_tilde, b.theta_tilde, "absdiff", 0.0));
}

TEST_CASE("designed beamforming beats random beamforming on average", "[beamforming]")
{
    Scenario s;
    s.num_irs_elements = 32;
    double designed = 0.0, random = 0.0;
    const std::size_t trials = 200;
    for (std::size_t t = 0; t < trials; ++t)
    {
        const auto ch = generate_channels(s, trial_seed(9, t));
        designed += best_rate_on_grid(compute_coefficients(s, ch, design_beamforming(ch)));
        random += best_rate_on_grid(compute_coefficients(s, ch, random_design(1, 32, trial_seed(10, t))));
    }
    CHECK(designed / trials > random / trials);
}
