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
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace irspa;
using Catch::Approx;
using Catch::Matchers::WithinAbs;

namespace
{
    void check_roots(const std::vector<double> &got, const std::vector<double> &expected, double tol)
    {
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            CHECK_THAT(got[i], WithinAbs(expected[i], tol));
    }

    // Monic coefficients of prod (x - r_i).
    std::vector<double> from_roots(const std::vector<double> &roots)
    {
        std::vector<double> p = {1.0};
        for (double r : roots)
        {
            std::vector<double> next(p.size() + 1, 0.0);
            for (std::size_t i = 0; i < p.size(); ++i)
            {
                next[i] += p[i];
                next[i + 1] -= r * p[i];
            }
            p = next;
        }
        return p;
    }
}

TEST_CASE("quartic examples", "[polyroots]")
{
    check_roots(solve_quartic(QuarticCoefficients::monic(0, -10, 0, 9)).real_roots, {-3, -1, 1, 3}, 1e-12);
    check_roots(solve_quartic(QuarticCoefficients::monic(0, 0, 0, 0)).real_roots, {0}, 1e-12);

    const auto p = from_roots({0.3, 0.6, -1.0, 2.0});
    const RootSet rs = solve_quartic(QuarticCoefficients::monic(p[1], p[2], p[3], p[4]));
    check_roots(rs.real_roots, {-1.0, 0.3, 0.6, 2.0}, 1e-10);
    check_roots(rs.real_roots, oracle::companion_real_roots(p), 1e-10);
    CHECK(rs.degree == 4);

    SECTION("no real roots")
    {
        CHECK(solve_quartic(QuarticCoefficients::monic(0, 2, 0, 1)).real_roots.empty()); // (x^2 + 1)^2
        CHECK(solve_quartic(QuarticCoefficients::monic(0, 0, 0, 1)).real_roots.empty());
    }
    SECTION("double roots are merged")
    {
        const auto d = from_roots({1.5, 1.5, -2.0, 4.0});
        check_roots(solve_quartic(QuarticCoefficients::monic(d[1], d[2], d[3], d[4])).real_roots, {-2.0, 1.5, 4.0}, 1e-6);
    }
    SECTION("biquadratic with zero odd terms after depression")
    {
        // (x - 1)^4 - 5 (x - 1)^2 + 4 has roots 1 +- 1, 1 +- 2
        const auto d = from_roots({-1.0, 0.0, 2.0, 3.0});
        check_roots(solve_quartic(QuarticCoefficients::monic(d[1], d[2], d[3], d[4])).real_roots, {-1, 0, 2, 3}, 1e-10);
    }
}

TEST_CASE("cubic and quadratic examples", "[polyroots]")
{
    check_roots(solve_cubic(0, 0, -1), {1}, 1e-14);
    check_roots(solve_cubic(-6, 11, -6), {1, 2, 3}, 1e-12);
    check_roots(solve_cubic(0, 0, 8), {-2}, 1e-14); // negative argument of the real cube root
    check_roots(solve_quadratic(1, -3, 2), {1, 2}, 1e-14);
    check_roots(solve_quadratic(0, 2, -1), {0.5}, 1e-15);
    CHECK(solve_quadratic(1, 0, 1).empty());
    check_roots(solve_quadratic(1, -2e8, 1), {5e-9, 2e8}, 1e-20); // cancellation-free small root
    CHECK(solve_quadratic(1, -2e8, 1)[0] == Approx(5e-9).epsilon(1e-12));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; ++t)
    {
        const double a2 = oracle::random_coefficient(rng);
        const double a1 = oracle::random_coefficient(rng);
        const double a0 = oracle::random_coefficient(rng);
        const auto roots = solve_cubic(a2, a1, a0);
        const auto expected = oracle::companion_real_roots({1.0, a2, a1, a0});
        if (roots.size() != expected.size())
        {
            CHECK(oracle::root_set_mismatches({1.0, a2, a1, a0}, roots) == 0);
            continue;
        }
        for (std::size_t i = 0; i < roots.size(); ++i)
            CHECK(std::abs(roots[i] - expected[i]) <= 1e-10 * (1.0 + std::abs(expected[i])));
    }
}

TEST_CASE("random quartics: residual bound and companion agreement", "[polyroots]")
{
    std::mt19937_64 rng(17);
    std::size_t fallbacks = 0;
    const std::size_t draws = 10000;
    for (std::size_t t = 0; t < draws; ++t)
    {
        const double A = oracle::random_coefficient(rng);
        const double B = oracle::random_coefficient(rng);
        const double C = oracle::random_coefficient(rng);
        const double D = oracle::random_coefficient(rng);
        const RootSet rs = solve_quartic(QuarticCoefficients::monic(A, B, C, D));
        const std::vector<double> p = {1.0, A, B, C, D};
        REQUIRE(rs.residuals.size() == rs.real_roots.size());
        for (std::size_t i = 0; i < rs.real_roots.size(); ++i)
        {
            CHECK(rs.residuals[i] <= residual_tolerance(p, rs.real_roots[i]));
            CHECK(rs.residuals[i] == Approx(std::abs(polyval(p, rs.real_roots[i]))).margin(1e-300));
            if (i > 0)
                CHECK(rs.real_roots[i] > rs.real_roots[i - 1]);
        }
        CHECK(oracle::root_set_mismatches(p, rs.real_roots) == 0);
        fallbacks += rs.used_fallback ? 1 : 0;
    }
    // The closed form should carry the bulk of the work.
    CHECK(fallbacks < draws / 100);
}

TEST_CASE("companion fallback on a badly scaled quartic", "[polyroots]")
{
    const double A = -2.4851363487246395e-05, B = -80954215.397408158, C = 0.01518036265442455, D = -0.011893985225187855;
    const std::vector<double> p = {1.0, A, B, C, D};
    const RootSet rs = solve_quartic(QuarticCoefficients::monic(A, B, C, D));
    CHECK(rs.used_fallback);
    REQUIRE_FALSE(rs.real_roots.empty());
    for (std::size_t i = 0; i < rs.real_roots.size(); ++i)
        CHECK(rs.residuals[i] <= residual_tolerance(p, rs.real_roots[i]));
    CHECK(oracle::root_set_mismatches(p, rs.real_roots) == 0);
    CHECK_FALSE(solve_quartic(QuarticCoefficients::monic(A, B, C, D), {.allow_fallback = false}).used_fallback);
}

TEST_CASE("closed form alone on well-separated roots", "[polyroots]")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pick(-3.0, 3.0);
    for (int t = 0; t < 500; ++t)
    {
        std::vector<double> roots = {pick(rng), pick(rng), pick(rng), pick(rng)};
        std::sort(roots.begin(), roots.end());
        if (roots[1] - roots[0] < 0.1 || roots[2] - roots[1] < 0.1 || roots[3] - roots[2] < 0.1)
            continue;
        const auto p = from_roots(roots);
        const RootSet rs = solve_quartic(QuarticCoefficients::monic(p[1], p[2], p[3], p[4]), {.allow_fallback = false});
        check_roots(rs.real_roots, roots, 1e-9);
    }
}

TEST_CASE("quartic normalization and degeneracy", "[polyroots]")
{
    const auto q = QuarticCoefficients::from_unnormalized({2.0, -4.0, 6.0, 8.0, -10.0});
    CHECK(q.A == -2.0);
    CHECK(q.B == 3.0);
    CHECK(q.C == 4.0);
    CHECK(q.D == -5.0);
    CHECK_FALSE(q.degenerate());

    SECTION("vanishing leading term solves the cubic")
    {
        const auto c = QuarticCoefficients::from_unnormalized({1e-15, 1.0, -6.0, 11.0, -6.0});
        CHECK(c.degenerate());
        const RootSet rs = solve_quartic(c);
        CHECK(rs.degree == 3);
        check_roots(rs.real_roots, {1, 2, 3}, 1e-10);
    }
    SECTION("cascading degeneracy down to linear")
    {
        const RootSet rs = solve_quartic(QuarticCoefficients::from_unnormalized({0.0, 0.0, 0.0, 2.0, -1.0}));
        CHECK(rs.degree == 1);
        check_roots(rs.real_roots, {0.5}, 1e-15);
    }
    SECTION("quadratic numerator")
    {
        const double coeffs[] = {0.0, 0.0, 1.0, -3.0, 2.0};
        const RootSet rs = real_polynomial_roots(coeffs);
        CHECK(rs.degree == 2);
        check_roots(rs.real_roots, {1, 2}, 1e-14);
    }
    SECTION("constant polynomial has no roots")
    {
        const double coeffs[] = {0.0, 0.0, 0.0, 0.0, 3.0};
        CHECK(real_polynomial_roots(coeffs).real_roots.empty());
    }
}

TEST_CASE("polyval", "[polyroots]")
{
    const double p[] = {1.0, -2.0, 3.0};
    CHECK(polyval(p, 2.0) == 3.0);
    CHECK(polyval(p, 0.0) == 3.0);
}
