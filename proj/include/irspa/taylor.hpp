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

#ifndef IRSPA_TAYLOR_HPP
#define IRSPA_TAYLOR_HPP

#include "irspa/objective.hpp"
#include "irspa/polyroots.hpp"

namespace irspa
{
    /// Numerator k1 b^4 + k2 b^3 + k3 b^2 + k4 b of the quartic-over-linear surrogate of f.
    struct SurrogateCoefficients
    {
        double k1 = 0.0;
        double k2 = 0.0;
        double k3 = 0.0;
        double k4 = 0.0;

        double numerator(double beta) const;
    };

    /// Taylor data of q(beta) = sqrt(l1 beta^2 + l beta + f) around beta0: value and first three derivatives.
    struct TaylorExpansion
    {
        double beta0 = 0.5;
        double q0 = 0.0;
        double q1 = 0.0;
        double q2 = 0.0;
        double q3 = 0.0;
        SurrogateCoefficients k;

        /// Truncated Taylor polynomial of q of the given order (0..3).
        double q_hat(double beta, int order = 3) const;
    };

    /// Throws std::domain_error unless the radicand is strictly positive at beta0.
    TaylorExpansion expand_q(const ObjectiveCoefficients &c, double beta0 = 0.5);

    /// Expands u b^2 + 2 e b q_hat(b) + d b (third order) in powers of b.
    SurrogateCoefficients surrogate_coeffs(const TaylorExpansion &te, const ObjectiveCoefficients &c);

    /// Numerator of d/db [k-poly / (b b + a)]:
    ///   K1 = 3 b k1, K2 = 2 b k2 + 4 a k1, K3 = b k3 + 3 a k2, K4 = 2 a k3, K5 = a k4.
    QuarticCoefficients derivative_numerator(const TaylorExpansion &te, const ObjectiveCoefficients &c);

    /// Surrogate objective (u b^2 + 2 e b q_hat(b) + d b) / (b b + a) with q_hat of the given order.
    double f_surrogate(const TaylorExpansion &te, const ObjectiveCoefficients &c, double beta, int order = 3);
}

#endif
