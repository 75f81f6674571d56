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

#include "irspa/polyroots.hpp"

#include <algorithm>
#include <armadillo>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace irspa
{
    namespace
    {
        constexpr double kDegenerateLeading = 1e-12;
        constexpr double kResidualRel = 1e-8;
        constexpr double kImagRel = 1e-7;
        constexpr double kMergeRel = 1e-7;

        // Fixed-capacity root buffer; keeps the closed-form paths free of heap traffic.
        struct RootBuffer
        {
            std::array<double, 4> v{};
            std::size_t n = 0;
            void push(double x) { v[n++] = x; }
            const double *begin() const { return v.data(); }
            const double *end() const { return v.data() + n; }
        };

        double polyderiv(std::span<const double> c, double x)
        {
            const std::size_t n = c.size() - 1;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                acc = acc * x + c[i] * static_cast<double>(n - i);
            return acc;
        }

        // Newton steps while they lower |p|, at most twelve.
        double polish(std::span<const double> c, double x)
        {
            double px = polyval(c, x);
            for (int it = 0; it < 12 && px != 0.0; ++it)
            {
                const double dp = polyderiv(c, x);
                if (dp == 0.0 || !std::isfinite(dp))
                    break;
                const double step = px / dp;
                const double next = x - step;
                const double pn = polyval(c, next);
                if (!std::isfinite(next) || !(std::abs(pn) < std::abs(px)))
                    break;
                x = next;
                px = pn;
                if (std::abs(step) <= 1e-16 * std::abs(x))
                    break;
            }
            return x;
        }

        // Sorts the buffer and drops near-duplicates in place.
        void sort_and_merge(RootBuffer &roots)
        {
            for (std::size_t i = 1; i < roots.n; ++i)
                for (std::size_t j = i; j > 0 && roots.v[j] < roots.v[j - 1]; --j)
                    std::swap(roots.v[j], roots.v[j - 1]);
            std::size_t kept = 0;
            for (std::size_t i = 0; i < roots.n; ++i)
            {
                const double r = roots.v[i];
                if (kept > 0 && std::abs(r - roots.v[kept - 1]) <= kMergeRel * (1.0 + std::abs(r)))
                    continue;
                roots.v[kept++] = r;
            }
            roots.n = kept;
        }

        std::vector<double> to_vector(const RootBuffer &roots)
        {
            return std::vector<double>(roots.begin(), roots.end());
        }

        // Real roots of a x^2 + b x + c (linear when a == 0), appended unsorted.
        void quadratic_into(double a, double b, double c, RootBuffer &out)
        {
            if (a == 0.0)
            {
                if (b != 0.0)
                    out.push(-c / b);
                return;
            }
            const double disc = b * b - 4.0 * a * c;
            if (disc < 0.0)
                return;
            if (disc == 0.0)
            {
                out.push(-b / (2.0 * a));
                return;
            }
            const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
            out.push(q / a);
            out.push(q != 0.0 ? c / q : 0.0);
        }

        // Real roots of x^3 + p x + q, not yet polished.
        RootBuffer depressed_cubic(double p, double q)
        {
            RootBuffer out;
            if (p == 0.0)
            {
                out.push(std::cbrt(-q));
                return out;
            }

            const double disc = q * q / 4.0 + p * p * p / 27.0;
            if (disc > 0.0)
            {
                // Pick the cube root argument without cancellation.
                const double w = -q / 2.0 - std::copysign(std::sqrt(disc), q);
                const double s = std::cbrt(w);
                out.push((s != 0.0) ? s - p / (3.0 * s) : 0.0);
                return out;
            }

            // Three real roots (two coincide when disc == 0).
            const double m = 2.0 * std::sqrt(-p / 3.0);
            const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
            const double phi = std::acos(arg) / 3.0;
            constexpr double third = 2.0 * std::numbers::pi / 3.0;
            out.push(m * std::cos(phi));
            out.push(m * std::cos(phi - third));
            out.push(m * std::cos(phi - 2.0 * third));
            return out;
        }

        // Ferrari split of x^4 + A x^3 + B x^2 + C x + D into two quadratics, using the real root gamma of
        // the resolvent cubic that maximizes eta^2 = A^2/4 - B + gamma.
        RootBuffer ferrari(double A, double B, double C, double D)
        {
            const double alpha1 = (3.0 * A * C - 12.0 * D - B * B) / 3.0;
            const double alpha2 = (-2.0 * B * B * B + 9.0 * A * B * C + 72.0 * B * D - 27.0 * C * C - 27.0 * A * A * D) / 27.0;

            // Resolvent y^3 - B y^2 + (AC - 4D) y + (4BD - A^2 D - C^2) = 0, y = t + B/3.
            const std::array<double, 4> resolvent = {1.0, -B, A * C - 4.0 * D, 4.0 * B * D - A * A * D - C * C};
            double gamma = -std::numeric_limits<double>::infinity();
            for (double t : depressed_cubic(alpha1, alpha2))
                gamma = std::max(gamma, polish(resolvent, t + B / 3.0));

            const double scale = 1.0 + std::abs(A);
            const double eta2 = A * A / 4.0 - B + gamma;
            const double eta = std::sqrt(std::max(eta2, 0.0));

            RootBuffer roots;
            if (eta < 1e-10 * scale)
            {
                // Biquadratic: the depressed quartic y^4 + p y^2 + r has no odd term.
                const double p = B - 3.0 * A * A / 8.0;
                const double r = D - A * C / 4.0 + A * A * B / 16.0 - 3.0 * A * A * A * A / 256.0;
                const double ztol = 1e-12 * (1.0 + std::abs(p));
                RootBuffer zs;
                quadratic_into(1.0, p, r, zs);
                for (double z : zs)
                {
                    if (z < -ztol)
                        continue;
                    const double y = std::sqrt(std::max(z, 0.0));
                    roots.push(y - A / 4.0);
                    roots.push(-y - A / 4.0);
                }
                return roots;
            }

            // (x^2 + A/2 x + gamma/2)^2 - (eta x + delta)^2 splits into two real quadratics.
            const double delta = (A * gamma / 2.0 - C) / (2.0 * eta);
            double c1 = gamma / 2.0 - delta;
            double c2 = gamma / 2.0 + delta;
            // The smaller constant loses digits to cancellation; recover it from c1 c2 = D.
            if (std::abs(c1) < std::abs(c2))
                c1 = D / c2;
            else if (c1 != 0.0)
                c2 = D / c1;
            quadratic_into(1.0, A / 2.0 - eta, c1, roots);
            quadratic_into(1.0, A / 2.0 + eta, c2, roots);
            return roots;
        }

        // Polished, sorted, distinct real roots of x^3 + a2 x^2 + a1 x + a0.
        RootBuffer cubic_roots(double a2, double a1, double a0)
        {
            const std::array<double, 4> c = {1.0, a2, a1, a0};
            const double p = a1 - a2 * a2 / 3.0;
            const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
            RootBuffer roots = depressed_cubic(p, q);
            for (std::size_t i = 0; i < roots.n; ++i)
                roots.v[i] = polish(c, roots.v[i] - a2 / 3.0);
            sort_and_merge(roots);
            return roots;
        }

        RootBuffer companion_real_roots(std::span<const double> monic)
        {
            const arma::uword n = monic.size() - 1;
            arma::mat companion(n, n, arma::fill::zeros);
            for (arma::uword j = 0; j < n; ++j)
                companion(0, j) = -monic[j + 1];
            for (arma::uword i = 1; i < n; ++i)
                companion(i, i - 1) = 1.0;

            RootBuffer roots;
            arma::cx_vec eigenvalues;
            if (!arma::eig_gen(eigenvalues, companion))
                return roots;
            for (const auto &lambda : eigenvalues)
                if (std::abs(lambda.imag()) <= kImagRel * std::max(1.0, std::abs(lambda)))
                    roots.push(lambda.real());
            return roots;
        }

        RootSet finalize(std::span<const double> monic, RootBuffer raw)
        {
            RootSet out;
            out.degree = static_cast<int>(monic.size()) - 1;
            for (std::size_t i = 0; i < raw.n; ++i)
                raw.v[i] = polish(monic, raw.v[i]);
            sort_and_merge(raw);
            out.real_roots = to_vector(raw);
            out.residuals.reserve(raw.n);
            for (double r : out.real_roots)
                out.residuals.push_back(std::abs(polyval(monic, r)));
            return out;
        }

        bool within_tolerance(std::span<const double> monic, const RootSet &rs)
        {
            for (std::size_t i = 0; i < rs.real_roots.size(); ++i)
                if (!(rs.residuals[i] <= residual_tolerance(monic, rs.real_roots[i])))
                    return false;
            return true;
        }
    }

    double polyval(std::span<const double> coeffs, double x)
    {
        double acc = 0.0;
        for (double c : coeffs)
            acc = acc * x + c;
        return acc;
    }

    double residual_tolerance(std::span<const double> monic_coeffs, double root)
    {
        double scale = 1.0;
        for (double c : monic_coeffs)
            scale = std::max(scale, std::abs(c));
        double power = 1.0;
        for (std::size_t i = 1; i < monic_coeffs.size(); ++i)
            power *= std::abs(root);
        return kResidualRel * (1.0 + power) * scale;
    }

    QuarticCoefficients QuarticCoefficients::monic(double A, double B, double C, double D)
    {
        QuarticCoefficients q;
        q.A = A;
        q.B = B;
        q.C = C;
        q.D = D;
        q.K = {1.0, A, B, C, D};
        return q;
    }

    QuarticCoefficients QuarticCoefficients::from_unnormalized(const std::array<double, 5> &K)
    {
        QuarticCoefficients q;
        q.K = K;
        q.A = q.B = q.C = q.D = 0.0;
        if (!q.degenerate())
        {
            q.A = K[1] / K[0];
            q.B = K[2] / K[0];
            q.C = K[3] / K[0];
            q.D = K[4] / K[0];
        }
        return q;
    }

    bool QuarticCoefficients::degenerate() const
    {
        const double tail = std::max({std::abs(K[1]), std::abs(K[2]), std::abs(K[3]), std::abs(K[4])});
        return std::abs(K[0]) <= kDegenerateLeading * tail;
    }

    std::vector<double> solve_quadratic(double a, double b, double c)
    {
        RootBuffer roots;
        quadratic_into(a, b, c, roots);
        sort_and_merge(roots);
        return to_vector(roots);
    }

    std::vector<double> solve_cubic(double a2, double a1, double a0)
    {
        return to_vector(cubic_roots(a2, a1, a0));
    }

    RootSet solve_quartic(const QuarticCoefficients &q, QuarticOptions opts)
    {
        if (q.degenerate())
            return real_polynomial_roots(std::span<const double>(q.K.data() + 1, 4), opts);

        const std::array<double, 5> monic = {1.0, q.A, q.B, q.C, q.D};
        RootSet rs = finalize(monic, ferrari(q.A, q.B, q.C, q.D));
        if (opts.allow_fallback && !within_tolerance(monic, rs))
        {
            rs = finalize(monic, companion_real_roots(monic));
            rs.used_fallback = true;
        }
        return rs;
    }

    RootSet real_polynomial_roots(std::span<const double> coeffs, QuarticOptions opts)
    {
        double largest = 0.0;
        for (double c : coeffs)
            largest = std::max(largest, std::abs(c));

        std::size_t lead = 0;
        while (lead < coeffs.size() && std::abs(coeffs[lead]) <= kDegenerateLeading * largest)
            ++lead;

        RootSet rs;
        if (lead + 1 >= coeffs.size())
        {
            rs.degree = 0; // constant (or identically zero) polynomial: no isolated roots
            return rs;
        }

        const std::size_t degree = coeffs.size() - 1 - lead;
        if (degree > 4)
            throw std::invalid_argument("real_polynomial_roots: degree above 4");

        std::vector<double> monic(degree + 1);
        for (std::size_t i = 0; i <= degree; ++i)
            monic[i] = coeffs[lead + i] / coeffs[lead];
        monic[0] = 1.0;

        switch (degree)
        {
        case 4:
            return solve_quartic(QuarticCoefficients::monic(monic[1], monic[2], monic[3], monic[4]), opts);
        case 3:
        {
            rs = finalize(monic, cubic_roots(monic[1], monic[2], monic[3]));
            if (opts.allow_fallback && !within_tolerance(monic, rs))
            {
                rs = finalize(monic, companion_real_roots(monic));
                rs.used_fallback = true;
            }
            return rs;
        }
        case 2:
        {
            RootBuffer roots;
            quadratic_into(1.0, monic[1], monic[2], roots);
            return finalize(monic, roots);
        }
        default:
        {
            RootBuffer roots;
            roots.push(-monic[1]);
            return finalize(monic, roots);
        }
        }
    }
}
