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

#ifndef IRSPA_BEAMFORMING_HPP
#define IRSPA_BEAMFORMING_HPP

#include "irspa/scenario.hpp"

#include <armadillo>
#include <cstdint>

namespace irspa
{
    /// Fixed transmit beamformer v (length M) and IRS direction theta~ (length N), both unit-norm.
    /// The reflection vector applied by the IRS is rho * theta~, with rho from compute_rho().
    struct BeamformingDesign
    {
        arma::cx_vec v;
        arma::cx_vec theta_tilde;
    };

    /// MRT on the direct link, v = h / ||h||, followed by per-element phase alignment of the
    /// cascaded link so that every term conj(theta~_n) conj(g_n) [H_si v]_n has the phase of h^H v.
    /// Element magnitudes are uniform, 1/sqrt(N).
    /// Throws std::invalid_argument if h is identically zero.
    BeamformingDesign design_beamforming(const ChannelRealization &ch);

    /// Independent uniformly random unit-norm v and theta~ (reference for design sanity checks).
    BeamformingDesign random_design(arma::uword num_bs_antennas, arma::uword num_irs_elements, std::uint64_t seed);

    struct RhoInputs
    {
        double total_power;     // P
        double theta_m_norm2;   // ||theta~^H diag(H_si v)||^2
        double irs_noise_power; // sigma_I^2
    };

    /// IRS amplification magnitude that spends exactly (1 - beta) P at the IRS output:
    ///   rho = sqrt((1 - beta) P / (beta P ||theta~^H M||^2 + sigma_I^2))
    double compute_rho(double beta, const RhoInputs &in);
}

#endif
