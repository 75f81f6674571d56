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

#ifndef IRSPA_SOLVERS_HPP
#define IRSPA_SOLVERS_HPP

#include "irspa/objective.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace irspa
{
    /// Multi-start gradient ascent settings.
    struct GAConfig
    {
        std::size_t num_inits = 32;            // K
        double step_length = 0.01;             // p, max move per iteration
        double accuracy = 1e-6;                // stop when |beta_{i+1} - beta_i| <= accuracy
        std::size_t max_iters_per_init = 10000;
        double safe_margin = gradient_margin;  // iterates stay in [margin, 1 - margin]
        int max_halvings = 30;

        void validate() const;
    };

    /// Candidate PA factors. Always holds 0 and 1; values outside [0, 1] are replaced by the
    /// nearest endpoint, NaNs are dropped, and near-duplicates (1e-12) are merged.
    class CandidateSet
    {
    public:
        CandidateSet();

        void add(double beta);
        std::span<const double> values() const { return values_; }
        std::size_t size() const { return values_.size(); }

        /// Largest f over the set, ties to the smaller beta; `evals` is increased per evaluation.
        double best(const ObjectiveCoefficients &c, std::size_t &evals) const;

    private:
        std::vector<double> values_; // ascending
    };

    struct GAResult
    {
        double beta_final = 0.0;
        std::size_t iterations = 0;
        std::size_t evals = 0;
    };

    /// Normalized-step ascent from one start: beta += p f'/(|f'| + 1e-30), halving p (and keeping it
    /// halved) whenever the move does not increase f. Stops on the accuracy rule, on max iterations,
    /// or when the iterate reaches the boundary of the safe interval.
    GAResult ga_from_point(const ObjectiveCoefficients &c, double beta_start, const GAConfig &cfg);

    /// K equally spaced starts over [margin, 1 - margin]; a single start sits at 0.5.
    std::vector<double> initial_points(std::size_t num_inits, double margin);

    /// Exhaustive search over the uniform grid i / (grid_points - 1) of [0, 1].
    PASolution solve_es(const ObjectiveCoefficients &c, std::size_t grid_points = 10001);

    /// Single-start ascent from `beta_start` plus the endpoint candidates.
    PASolution solve_ga(const ObjectiveCoefficients &c, const GAConfig &cfg, double beta_start = 0.5);

    /// Equal-spacing multi-start ascent; argmax of f over {0, 1, final iterates}.
    PASolution solve_esmpi_ga(const ObjectiveCoefficients &c, const GAConfig &cfg = {});

    /// Third-order Taylor surrogate around beta0, stationary points from the quartic derivative
    /// numerator, argmax of the exact f over {0, 1, clamped roots}.
    PASolution solve_tte(const ObjectiveCoefficients &c, double beta0 = 0.5);

    PASolution solve_fixed(const ObjectiveCoefficients &c, double beta_fixed);
    PASolution solve_epa(const ObjectiveCoefficients &c);

    struct SolverSettings
    {
        GAConfig ga;
        std::size_t es_grid_points = 10001; // step 1e-4
        double taylor_point = 0.5;
        double fixed_beta = 0.99;
    };

    PASolution solve(SolverId id, const ObjectiveCoefficients &c, const SolverSettings &settings = {});
}

#endif
