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

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace irspa
{
    BeamformingDesign design_beamforming(const ChannelRealization &ch)
    {
        const double h_norm = arma::norm(ch.h, 2);
        if (!(h_norm > 0.0))
            throw std::invalid_argument("design_beamforming: direct channel h is zero");

        BeamformingDesign design;
        design.v = ch.h / h_norm;

        const std::complex<double> direct = arma::cdot(ch.h, design.v); // h^H v
        const double direct_phase = std::arg(direct);

        const arma::cx_vec Hv = ch.H_si * design.v;
        const arma::uword N = ch.g.n_elem;
        const double magnitude = 1.0 / std::sqrt(static_cast<double>(N));

        design.theta_tilde.set_size(N);
        for (arma::uword n = 0; n < N; ++n)
        {
            const double cascade_phase = std::arg(std::conj(ch.g(n)) * Hv(n));
            design.theta_tilde(n) = std::polar(magnitude, cascade_phase - direct_phase);
        }
        return design;
    }

    BeamformingDesign random_design(arma::uword num_bs_antennas, arma::uword num_irs_elements, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> unit(0.0, 1.0);
        auto draw = [&](arma::uword n)
        {
            arma::cx_vec x(n);
            for (auto &c : x)
            {
                const double re = unit(rng);
                const double im = unit(rng);
                c = {re, im};
            }
            return arma::cx_vec(x / arma::norm(x, 2));
        };

        BeamformingDesign design;
        design.v = draw(num_bs_antennas);
        design.theta_tilde = draw(num_irs_elements);
        return design;
    }

    double compute_rho(double beta, const RhoInputs &in)
    {
        const double irs_power = (1.0 - beta) * in.total_power;
        const double incident = beta * in.total_power * in.theta_m_norm2 + in.irs_noise_power;
        return std::sqrt(std::max(irs_power, 0.0) / incident);
    }
}
