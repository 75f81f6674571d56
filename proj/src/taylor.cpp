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

#include "irspa/taylor.hpp"

#include <cmath>
#include <stdexcept>

namespace irspa
{
    double SurrogateCoefficients::numerator(double beta) const
    {
        return (((k1 * beta + k2) * beta + k3) * beta + k4) * beta;
    }

    double TaylorExpansion::q_hat(double beta, int order) const
    {
        if (order < 0 || order > 3)
            throw std::invalid_argument("TaylorExpansion::q_hat: order must be 0..3");
        const double x = beta - beta0;
        const double terms[4] = {q0, q1 * x, 0.5 * q2 * x * x, q3 * x * x * x / 6.0};
        double acc = 0.0;
        for (int i = 0; i <= order; ++i)
            acc += terms[i];
        return acc;
    }

    TaylorExpansion expand_q(const ObjectiveCoefficients &c, double beta0)
    {
        const double r = (c.l1 * beta0 + c.l) * beta0 + c.f;
        if (!(r > 0.0))
            throw std::domain_error("expand_q: radicand must be positive at the expansion point");

        const double slope = 2.0 * c.l1 * beta0 + c.l;
        const double root = std::sqrt(r);
        const double r32 = r * root;
        const double r52 = r32 * r;

        TaylorExpansion te;
        te.beta0 = beta0;
        te.q0 = root;
        te.q1 = slope / (2.0 * root);
        te.q2 = c.l1 / root - slope * slope / (4.0 * r32);
        te.q3 = -3.0 * c.l1 * slope / (2.0 * r32) + 3.0 * slope * slope * slope / (8.0 * r52);
        te.k = surrogate_coeffs(te, c);
        return te;
    }

    SurrogateCoefficients surrogate_coeffs(const TaylorExpansion &te, const ObjectiveCoefficients &c)
    {
        const double e = c.e;
        const double b0 = te.beta0;
        SurrogateCoefficients k;
        k.k1 = e * te.q3 / 3.0;
        k.k2 = e * te.q2 - e * b0 * te.q3;
        k.k3 = c.u + 2.0 * e * te.q1 - 2.0 * e * b0 * te.q2 + e * b0 * b0 * te.q3;
        k.k4 = c.d + 2.0 * e * te.q0 - 2.0 * e * b0 * te.q1 + e * b0 * b0 * te.q2 - e * b0 * b0 * b0 * te.q3 / 3.0;
        return k;
    }

    QuarticCoefficients derivative_numerator(const TaylorExpansion &te, const ObjectiveCoefficients &c)
    {
        const auto &k = te.k;
        return QuarticCoefficients::from_unnormalized({3.0 * c.b * k.k1,
                                                       2.0 * c.b * k.k2 + 4.0 * c.a * k.k1,
                                                       c.b * k.k3 + 3.0 * c.a * k.k2,
                                                       2.0 * c.a * k.k3,
                                                       c.a * k.k4});
    }

    double f_surrogate(const TaylorExpansion &te, const ObjectiveCoefficients &c, double beta, int order)
    {
        const double num = c.u * beta * beta + 2.0 * c.e * beta * te.q_hat(beta, order) + c.d * beta;
        return num / (c.b * beta + c.a);
    }
}
