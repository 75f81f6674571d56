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

#ifndef IRSPA_POLYROOTS_HPP
#define IRSPA_POLYROOTS_HPP

#include <array>
#include <span>
#include <vector>

namespace irspa
{
    /// Quartic K1 x^4 + K2 x^3 + K3 x^2 + K4 x + K5 and its monic form x^4 + A x^3 + B x^2 + C x + D.
    struct QuarticCoefficients
    {
        double A = 0.0;
        double B = 0.0;
        double C = 0.0;
        double D = 0.0;
        std::array<double, 5> K = {1.0, 0.0, 0.0, 0.0, 0.0}; // K1..K5

        static QuarticCoefficients monic(double A, double B, double C, double D);

        /// Normalizes by K1 unless the leading coefficient is degenerate, in which case A..D stay zero.
        static QuarticCoefficients from_unnormalized(const std::array<double, 5> &K);

        /// |K1| <= 1e-12 * max(|K2|, ..., |K5|): the polynomial is effectively of lower degree.
        bool degenerate() const;
    };

    /// Distinct real roots in ascending order, with |p(r)| per root for the polynomial actually solved
    /// (the monic quartic, or the normalized lower-degree polynomial in the degenerate case).
    struct RootSet
    {
        std::vector<double> real_roots;
        std::vector<double> residuals;
        int degree = 4;             // degree of the polynomial actually solved
        bool used_fallback = false; // companion-matrix eigenvalues replaced the closed form
    };

    struct QuarticOptions
    {
        bool allow_fallback = true;
    };

    /// Real roots of a quartic via Ferrari's resolvent-cubic construction, Newton-polished.
    /// Falls back to companion-matrix eigenvalues when any closed-form root misses the residual bound
    ///   |p(r)| <= 1e-8 (1 + |r|^4) max(1, |A|, |B|, |C|, |D|).
    RootSet solve_quartic(const QuarticCoefficients &q, QuarticOptions opts = {});

    /// Real roots of the monic cubic x^3 + a2 x^2 + a1 x + a0, ascending, distinct.
    std::vector<double> solve_cubic(double a2, double a1, double a0);

    /// Real roots of a x^2 + b x + c (linear when a == 0), ascending, distinct.
    std::vector<double> solve_quadratic(double a, double b, double c);

    /// Real roots of a polynomial of degree <= 4, coefficients given highest power first.
    /// Leading coefficients negligible against the largest one are dropped.
    RootSet real_polynomial_roots(std::span<const double> coeffs, QuarticOptions opts = {});

    /// Horner evaluation, coefficients highest power first.
    double polyval(std::span<const double> coeffs, double x);

    /// Residual bound used for the reported roots of a monic polynomial (coefficients highest first, leading 1).
    double residual_tolerance(std::span<const double> monic_coeffs, double root);
}

#endif
