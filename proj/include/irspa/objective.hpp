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

#ifndef IRSPA_OBJECTIVE_HPP
#define IRSPA_OBJECTIVE_HPP

#include "irspa/beamforming.hpp"
#include "irspa/scenario.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace irspa
{
    /// Scalars reducing the user SNR to a rational function of the PA factor beta:
    ///
    ///   f(beta) = (u beta^2 + 2 e beta sqrt(l1 beta^2 + l beta + f) + d beta) / (b beta + a)
    ///
    /// The radicand equals (1 - beta) P (beta P ||theta~^H M||^2 + sigma_I^2) with M = diag(H_si v),
    /// so it is nonnegative on [0, 1] and vanishes at beta = 1.
    struct ObjectiveCoefficients
    {
        double a = 0.0;
        double b = 0.0;
        double d = 0.0;
        double e = 0.0;
        double f = 0.0;
        double u = 0.0;
        double l = 0.0;
        double l1 = 0.0;

        double theta_m_norm2 = 0.0; // ||theta~^H M||^2
        double theta_g_norm2 = 0.0; // ||theta~^H G||^2
        double cascade_norm2 = 0.0; // ||theta~^H G H_si v||^2
        double direct_norm2 = 0.0;  // ||h^H v||^2

        double total_power = 0.0;
        double irs_noise_power = 0.0;
        double user_noise_power = 0.0;

        /// Radicand l1 beta^2 + l beta + f, with round-off negativity clamped to zero.
        double radicand(double beta) const;
    };

    ObjectiveCoefficients compute_coefficients(const Scenario &scenario, const ChannelRealization &ch,
                                               const BeamformingDesign &design);

    /// SNR at the user evaluated from the channels directly (rho first, then the received-signal ratio).
    double snr_direct(const Scenario &scenario, const ChannelRealization &ch, const BeamformingDesign &design,
                      double beta);

    /// Rational form of the SNR. Throws std::domain_error for beta outside [0, 1].
    double f_rational(const ObjectiveCoefficients &c, double beta);

    /// Interior safe margin of the gradient domain.
    inline constexpr double gradient_margin = 1e-6;

    /// Analytic df/dbeta. The radical's derivative diverges at beta = 1, so the domain is
    /// [gradient_margin, 1 - gradient_margin]; throws std::domain_error outside it.
    double f_gradient(const ObjectiveCoefficients &c, double beta);

    /// Achievable rate log2(1 + snr) in bits/s/Hz.
    double rate(double snr);

    enum class SolverId
    {
        ES,
        GA,
        ESMPI_GA,
        TTE,
        EPA,
        FIXED
    };

    std::string_view to_string(SolverId id);
    std::optional<SolverId> parse_solver_id(std::string_view name);

    /// Result of a power-allocation solver.
    struct PASolution
    {
        double beta_opt = 0.0;
        double snr = 0.0;
        double rate_bits = 0.0;
        SolverId solver_id = SolverId::ES;
        std::size_t evals = 0;      // objective + gradient evaluations
        std::size_t iterations = 0; // total gradient-ascent iterations; 0 for closed forms
    };
}

#endif
