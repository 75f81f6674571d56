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

#include "irspa/objective.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace irspa
{
    double ObjectiveCoefficients::radicand(double beta) const
    {
        const double magnitude = std::abs(l1) + std::abs(l) + std::abs(f);
        // With l1 + l + f = 0 the radicand is (1 - beta)(f - l1 beta); the factored form keeps the
        // zero at beta = 1 exact instead of leaving cancellation residue under the square root.
        const bool root_at_one = std::abs(l1 + l + f) <= 1e-9 * magnitude;
        const double r = root_at_one ? (1.0 - beta) * (f - l1 * beta) : (l1 * beta + l) * beta + f;
        if (r >= 0.0)
            return r;
        const double tolerance = 1e-12 * magnitude;
        if (r >= -tolerance)
            return 0.0;
        throw std::domain_error("ObjectiveCoefficients: negative radicand, coefficients are inconsistent");
    }

    ObjectiveCoefficients compute_coefficients(const Scenario &scenario, const ChannelRealization &ch,
                                               const BeamformingDesign &design)
    {
        const arma::cx_vec Hv = ch.H_si * design.v;
        const arma::vec theta_mag2 = arma::square(arma::abs(design.theta_tilde));

        // theta~^H G H_si v with G = diag(g^H)
        const std::complex<double> cascade = arma::sum(arma::conj(design.theta_tilde) % arma::conj(ch.g) % Hv);
        const std::complex<double> direct = arma::cdot(ch.h, design.v);

        ObjectiveCoefficients c;
        c.theta_m_norm2 = arma::dot(theta_mag2, arma::square(arma::abs(Hv)));
        c.theta_g_norm2 = arma::dot(theta_mag2, arma::square(arma::abs(ch.g)));
        c.cascade_norm2 = std::norm(cascade);
        c.direct_norm2 = std::norm(direct);
        c.total_power = scenario.total_power;
        c.irs_noise_power = scenario.irs_noise_power;
        c.user_noise_power = scenario.user_noise_power;

        const double P = scenario.total_power;
        const double sI2 = scenario.irs_noise_power;
        const double sn2 = scenario.user_noise_power;

        c.a = sI2 * P * c.theta_g_norm2 + sI2 * sn2;
        c.b = P * (sn2 * c.theta_m_norm2 - sI2 * c.theta_g_norm2);
        c.d = P * P * c.cascade_norm2 + P * sI2 * c.direct_norm2;
        c.e = P * std::real(cascade * std::conj(direct)); // Re{theta~^H G H_si v v^H h}
        c.f = P * sI2;
        c.u = P * P * (c.direct_norm2 * c.theta_m_norm2 - c.cascade_norm2);
        c.l = P * P * c.theta_m_norm2 - sI2 * P;
        c.l1 = -P * P * c.theta_m_norm2;
        return c;
    }

    double snr_direct(const Scenario &scenario, const ChannelRealization &ch, const BeamformingDesign &design,
                      double beta)
    {
        const double P = scenario.total_power;
        const arma::cx_vec Hv = ch.H_si * design.v;
        const double theta_m_norm2 = arma::dot(arma::square(arma::abs(design.theta_tilde)), arma::square(arma::abs(Hv)));
        const double rho = compute_rho(beta, {P, theta_m_norm2, scenario.irs_noise_power});

        // theta~^H G as a row vector: conj(theta~_n) conj(g_n)
        const arma::cx_rowvec theta_G = arma::cx_vec(design.theta_tilde % ch.g).t();
        const arma::cx_rowvec effective = rho * theta_G * ch.H_si + ch.h.t();

        const double signal = beta * P * std::norm(arma::as_scalar(effective * design.v));
        const double noise = scenario.irs_noise_power * rho * rho * std::pow(arma::norm(theta_G, 2), 2) +
                             scenario.user_noise_power;
        return signal / noise;
    }

    double f_rational(const ObjectiveCoefficients &c, double beta)
    {
        if (!(beta >= 0.0 && beta <= 1.0))
            throw std::domain_error("f_rational: beta must lie in [0, 1]");
        const double root = std::sqrt(c.radicand(beta));
        return (c.u * beta * beta + 2.0 * c.e * beta * root + c.d * beta) / (c.b * beta + c.a);
    }

    double f_gradient(const ObjectiveCoefficients &c, double beta)
    {
        if (!(beta >= gradient_margin && beta <= 1.0 - gradient_margin))
            throw std::domain_error("f_gradient: beta outside [1e-6, 1 - 1e-6]");

        const double root = std::sqrt(c.radicand(beta));
        const double slope = 2.0 * c.l1 * beta + c.l; // d(radicand)/dbeta
        double g1 = c.u * c.b * beta * beta;
        double g2 = c.a * c.d + 2.0 * c.a * c.u * beta + 2.0 * c.a * c.e * root;
        if (c.e != 0.0)
        {
            g1 += c.e * c.b * beta * beta * slope / root;
            g2 += c.e * c.a * beta * slope / root;
        }
        const double den = c.b * beta + c.a;
        return (g1 + g2) / (den * den);
    }

    double rate(double snr)
    {
        return std::log2(1.0 + snr);
    }

    namespace
    {
        constexpr std::array<std::pair<SolverId, std::string_view>, 6> solver_names{{
            {SolverId::ES, "es"},
            {SolverId::GA, "ga"},
            {SolverId::ESMPI_GA, "esmpi_ga"},
            {SolverId::TTE, "tte"},
            {SolverId::EPA, "epa"},
            {SolverId::FIXED, "fixed"},
        }};
    }

    std::string_view to_string(SolverId id)
    {
        for (const auto &[sid, name] : solver_names)
            if (sid == id)
                return name;
        return "unknown";
    }

    std::optional<SolverId> parse_solver_id(std::string_view name)
    {
        std::string lowered(name);
        std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                       [](unsigned char ch)
                       { return ch == '-' ? '_' : static_cast<char>(std::tolower(ch)); });
        for (const auto &[sid, label] : solver_names)
            if (label == lowered)
                return sid;
        return std::nullopt;
    }
}
