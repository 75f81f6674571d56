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

#include "irspa/solvers.hpp"

#include "irspa/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace irspa
{
    namespace
    {
        constexpr double kMergeTol = 1e-12;
        constexpr double kStepFloor = 1e-30;

        PASolution make_solution(SolverId id, const ObjectiveCoefficients &c, double beta, std::size_t evals,
                                 std::size_t iterations)
        {
            PASolution s;
            s.solver_id = id;
            s.beta_opt = beta;
            s.snr = f_rational(c, beta);
            s.rate_bits = rate(s.snr);
            s.evals = evals;
            s.iterations = iterations;
            return s;
        }
    }

    void GAConfig::validate() const
    {
        if (num_inits < 1)
            throw std::invalid_argument("GAConfig: num_inits must be >= 1");
        if (!(step_length > 0.0))
            throw std::invalid_argument("GAConfig: step_length must be positive");
        if (!(accuracy > 0.0))
            throw std::invalid_argument("GAConfig: accuracy must be positive");
        if (!(safe_margin >= gradient_margin && safe_margin < 0.5))
            throw std::invalid_argument("GAConfig: safe_margin must lie in [1e-6, 0.5)");
        if (max_iters_per_init < 1)
            throw std::invalid_argument("GAConfig: max_iters_per_init must be >= 1");
    }

    CandidateSet::CandidateSet()
    {
        values_.reserve(8);
        values_.push_back(0.0);
        values_.push_back(1.0);
    }

    void CandidateSet::add(double beta)
    {
        if (std::isnan(beta))
            return;
        beta = std::clamp(beta, 0.0, 1.0);
        auto it = std::lower_bound(values_.begin(), values_.end(), beta);
        if (it != values_.end() && *it - beta <= kMergeTol)
            return;
        if (it != values_.begin() && beta - *(it - 1) <= kMergeTol)
            return;
        values_.insert(it, beta);
    }

    double CandidateSet::best(const ObjectiveCoefficients &c, std::size_t &evals) const
    {
        double best_beta = values_.front();
        double best_value = -std::numeric_limits<double>::infinity();
        for (double beta : values_)
        {
            const double value = f_rational(c, beta);
            ++evals;
            if (value > best_value)
            {
                best_value = value;
                best_beta = beta;
            }
        }
        return best_beta;
    }

    GAResult ga_from_point(const ObjectiveCoefficients &c, double beta_start, const GAConfig &cfg)
    {
        const double lo = cfg.safe_margin;
        const double hi = 1.0 - cfg.safe_margin;
        if (!(beta_start >= lo && beta_start <= hi))
            throw std::domain_error("ga_from_point: start outside the safe interval");

        GAResult res;
        double beta = beta_start;
        double value = f_rational(c, beta);
        ++res.evals;
        double step = cfg.step_length;

        while (res.iterations < cfg.max_iters_per_init)
        {
            const double grad = f_gradient(c, beta);
            ++res.evals;
            ++res.iterations;
            if (grad == 0.0)
                break;
            const double direction = grad / (std::abs(grad) + kStepFloor);

            bool moved = false;
            double next = beta;
            for (int halving = 0; halving <= cfg.max_halvings; ++halving, step *= 0.5)
            {
                next = std::clamp(beta + step * direction, lo, hi);
                if (std::abs(next - beta) <= cfg.accuracy)
                    break; // any further move satisfies the stop rule
                const double candidate = f_rational(c, next);
                ++res.evals;
                if (candidate > value)
                {
                    value = candidate;
                    moved = true;
                    break;
                }
            }
            if (!moved)
                break;

            const double delta = std::abs(next - beta);
            beta = next;
            if (delta <= cfg.accuracy || beta <= lo || beta >= hi)
                break;
        }
        res.beta_final = beta;
        return res;
    }

    std::vector<double> initial_points(std::size_t num_inits, double margin)
    {
        if (num_inits == 1)
            return {0.5};
        std::vector<double> pts(num_inits);
        const double span = 1.0 - 2.0 * margin;
        for (std::size_t k = 0; k < num_inits; ++k)
            pts[k] = margin + span * static_cast<double>(k) / static_cast<double>(num_inits - 1);
        pts.back() = 1.0 - margin;
        return pts;
    }

    PASolution solve_es(const ObjectiveCoefficients &c, std::size_t grid_points)
    {
        if (grid_points < 2)
            throw std::invalid_argument("solve_es: grid_points must be >= 2");
        double best_beta = 0.0;
        double best_value = -std::numeric_limits<double>::infinity();
        const double denom = static_cast<double>(grid_points - 1);
        for (std::size_t i = 0; i < grid_points; ++i)
        {
            const double beta = (i + 1 == grid_points) ? 1.0 : static_cast<double>(i) / denom;
            const double value = f_rational(c, beta);
            if (value > best_value)
            {
                best_value = value;
                best_beta = beta;
            }
        }
        return make_solution(SolverId::ES, c, best_beta, grid_points, 0);
    }

    namespace
    {
        PASolution multi_start(SolverId id, const ObjectiveCoefficients &c, const GAConfig &cfg,
                               std::span<const double> starts)
        {
            CandidateSet candidates;
            std::size_t evals = 0;
            std::size_t iterations = 0;
            for (double start : starts)
            {
                const GAResult r = ga_from_point(c, start, cfg);
                candidates.add(r.beta_final);
                evals += r.evals;
                iterations += r.iterations;
            }
            const double beta = candidates.best(c, evals);
            return make_solution(id, c, beta, evals, iterations);
        }
    }

    PASolution solve_ga(const ObjectiveCoefficients &c, const GAConfig &cfg, double beta_start)
    {
        cfg.validate();
        const double start[] = {beta_start};
        return multi_start(SolverId::GA, c, cfg, start);
    }

    PASolution solve_esmpi_ga(const ObjectiveCoefficients &c, const GAConfig &cfg)
    {
        cfg.validate();
        const auto starts = initial_points(cfg.num_inits, cfg.safe_margin);
        return multi_start(SolverId::ESMPI_GA, c, cfg, starts);
    }

    PASolution solve_tte(const ObjectiveCoefficients &c, double beta0)
    {
        if (!(beta0 > 0.0 && beta0 < 1.0))
            throw std::domain_error("solve_tte: expansion point must lie in (0, 1)");

        const TaylorExpansion te = expand_q(c, beta0);
        const RootSet roots = solve_quartic(derivative_numerator(te, c));

        CandidateSet candidates;
        for (double r : roots.real_roots)
            candidates.add(r);

        std::size_t evals = 0;
        const double beta = candidates.best(c, evals);
        return make_solution(SolverId::TTE, c, beta, evals, 0);
    }

    PASolution solve_fixed(const ObjectiveCoefficients &c, double beta_fixed)
    {
        if (!(beta_fixed >= 0.0 && beta_fixed <= 1.0))
            throw std::domain_error("solve_fixed: beta must lie in [0, 1]");
        return make_solution(SolverId::FIXED, c, beta_fixed, 1, 0);
    }

    PASolution solve_epa(const ObjectiveCoefficients &c)
    {
        PASolution s = solve_fixed(c, 0.5);
        s.solver_id = SolverId::EPA;
        return s;
    }

    PASolution solve(SolverId id, const ObjectiveCoefficients &c, const SolverSettings &settings)
    {
        switch (id)
        {
        case SolverId::ES:
            return solve_es(c, settings.es_grid_points);
        case SolverId::GA:
            return solve_ga(c, settings.ga);
        case SolverId::ESMPI_GA:
            return solve_esmpi_ga(c, settings.ga);
        case SolverId::TTE:
            return solve_tte(c, settings.taylor_point);
        case SolverId::EPA:
            return solve_epa(c);
        case SolverId::FIXED:
            return solve_fixed(c, settings.fixed_beta);
        }
        throw std::invalid_argument("solve: unknown solver");
    }
}
