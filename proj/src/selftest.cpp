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

#include "irspa/bench.hpp"
#include "irspa/polyroots.hpp"
#include "irspa/taylor.hpp"

#include <armadillo>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>

namespace irspa
{
    namespace
    {
        struct Check
        {
            const char *name;
            std::function<bool(std::string &)> run;
        };

        std::string format(const char *pattern, double a, double b = 0.0)
        {
            char buf[160];
            std::snprintf(buf, sizeof(buf), pattern, a, b);
            return buf;
        }

        std::vector<ObjectiveCoefficients> draws(std::uint64_t seed, std::size_t count)
        {
            std::vector<ObjectiveCoefficients> out;
            Scenario sc;
            const unsigned sizes[] = {4, 16, 64};
            for (std::size_t t = 0; t < count; ++t)
            {
                sc.num_irs_elements = sizes[t % 3];
                out.push_back(trial_coefficients(sc, seed, t));
            }
            return out;
        }

        bool check_equivalence(std::uint64_t seed, std::string &detail)
        {
            Scenario sc;
            double worst = 0.0;
            for (std::size_t t = 0; t < 60; ++t)
            {
                sc.num_irs_elements = 4u << (2 * (t % 3));
                const ChannelRealization ch = generate_channels(sc, trial_seed(seed, t));
                const BeamformingDesign bf = design_beamforming(ch);
                const ObjectiveCoefficients c = compute_coefficients(sc, ch, bf);
                for (int i = 0; i <= 100; ++i)
                {
                    const double beta = i / 100.0;
                    const double direct = snr_direct(sc, ch, bf, beta);
                    worst = std::max(worst, std::abs(f_rational(c, beta) - direct) / (1.0 + direct));
                }
            }
            detail = format("max |f - snr|/(1 + snr) = %.3g", worst);
            return worst <= 1e-9;
        }

        bool check_gradient(std::uint64_t seed, std::string &detail)
        {
            double worst = 0.0;
            for (const auto &c : draws(seed, 60))
                for (int i = 0; i <= 94; ++i)
                {
                    const double beta = 0.01 + i * 0.01;
                    const double h = 1e-6;
                    const double fd = (f_rational(c, beta + h) - f_rational(c, beta - h)) / (2.0 * h);
                    const double scale = std::max(std::abs(fd), f_rational(c, beta));
                    worst = std::max(worst, std::abs(f_gradient(c, beta) - fd) / scale);
                }
            detail = format("max relative error = %.3g", worst);
            return worst <= 1e-5;
        }

        bool check_quartic(std::uint64_t seed, std::string &detail)
        {
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> mag(-3.0, 3.0);
            std::bernoulli_distribution sign(0.5);
            auto coef = [&]
            { return (sign(rng) ? -1.0 : 1.0) * std::pow(10.0, mag(rng)); };

            std::size_t bad = 0;
            for (int t = 0; t < 1000; ++t)
            {
                const auto q = QuarticCoefficients::monic(coef(), coef(), coef(), coef());
                const RootSet rs = solve_quartic(q);
                const std::array<double, 5> p = {1.0, q.A, q.B, q.C, q.D};

                arma::mat companion(4, 4, arma::fill::zeros);
                for (int j = 0; j < 4; ++j)
                    companion(0, j) = -p[j + 1];
                for (int i = 1; i < 4; ++i)
                    companion(i, i - 1) = 1.0;
                const arma::cx_vec eig = arma::eig_gen(companion);

                for (std::size_t i = 0; i < rs.real_roots.size(); ++i)
                {
                    const double r = rs.real_roots[i];
                    if (!(rs.residuals[i] <= residual_tolerance(p, r)))
                        ++bad;
                    bool matched = false;
                    for (const auto &lambda : eig)
                        matched = matched || std::abs(lambda - r) <= 1e-6 * (1.0 + std::abs(r));
                    if (!matched)
                        ++bad;
                }
                for (const auto &lambda : eig)
                {
                    if (std::abs(lambda.imag()) > 1e-9 * (1.0 + std::abs(lambda)))
                        continue;
                    bool found = false;
                    for (double r : rs.real_roots)
                        found = found || std::abs(lambda - r) <= 1e-6 * (1.0 + std::abs(r));
                    if (!found)
                        ++bad;
                }
            }
            detail = format("%.0f mismatches over 1000 quartics", static_cast<double>(bad));
            return bad == 0;
        }

        bool check_surrogate(std::uint64_t seed, std::string &detail)
        {
            double worst = 0.0;
            for (const auto &c : draws(seed, 60))
            {
                const TaylorExpansion te = expand_q(c);
                for (int i = 1; i <= 9; ++i)
                {
                    const double beta = 0.1 * i;
                    const double expected = c.u * beta * beta + 2.0 * c.e * beta * te.q_hat(beta, 3) + c.d * beta;
                    worst = std::max(worst, std::abs(te.k.numerator(beta) - expected) / std::abs(expected));
                }
            }
            detail = format("max relative deviation = %.3g", worst);
            return worst <= 1e-9;
        }

        bool check_dominance(std::uint64_t seed, std::string &detail)
        {
            std::size_t violations = 0;
            for (const auto &c : draws(seed, 60))
            {
                // ES resolves beta to 1e-4, so the finer solvers may beat it by a hair.
                const double es = solve_es(c).rate_bits;
                const double ga = solve_esmpi_ga(c).rate_bits;
                const double tte = solve_tte(c).rate_bits;
                const double epa = solve_epa(c).rate_bits;
                if (ga < solve_ga(c, {}).rate_bits - 1e-12)
                    ++violations;
                if (epa > es + 1e-3 || tte > es + 1e-3 || es > ga + 1e-3)
                    ++violations;
            }
            detail = format("%.0f ordering violations over 60 draws", static_cast<double>(violations));
            return violations == 0;
        }
    }

    bool run_selftest(std::uint64_t seed, std::ostream &log)
    {
        const Check checks[] = {
            {"model equivalence", [&](std::string &d) { return check_equivalence(seed, d); }},
            {"gradient oracle", [&](std::string &d) { return check_gradient(seed, d); }},
            {"quartic solver", [&](std::string &d) { return check_quartic(seed, d); }},
            {"surrogate coefficients", [&](std::string &d) { return check_surrogate(seed, d); }},
            {"solver dominance", [&](std::string &d) { return check_dominance(seed, d); }},
        };

        bool all = true;
        for (const auto &check : checks)
        {
            std::string detail;
            bool ok = false;
            try
            {
                ok = check.run(detail);
            }
            catch (const std::exception &e)
            {
                detail = std::string("exception: ") + e.what();
            }
            log << (ok ? "PASS " : "FAIL ") << check.name << ": " << detail << '\n';
            all = all && ok;
        }
        return all;
    }
}
