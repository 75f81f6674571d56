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

#ifndef IRSPA_BENCH_HPP
#define IRSPA_BENCH_HPP

#include "irspa/scenario.hpp"
#include "irspa/solvers.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace irspa
{
    enum class ExperimentKind
    {
        Solve,
        Curve,
        SweepK,
        SweepN
    };

    std::string_view to_string(ExperimentKind kind);

    struct ExperimentSpec
    {
        ExperimentKind kind = ExperimentKind::Solve;
        Scenario scenario;
        std::vector<SolverId> solvers = {SolverId::ES, SolverId::ESMPI_GA, SolverId::TTE,
                                         SolverId::GA, SolverId::EPA, SolverId::FIXED};
        std::size_t trials = 200;
        std::uint64_t master_seed = 1;
        std::vector<std::size_t> k_values = {1, 2, 4, 8, 16, 32, 64};
        std::vector<std::size_t> n_values; // empty: per-kind default
        std::size_t curve_points = 201;    // beta grid i / (curve_points - 1)
        SolverSettings settings;
        unsigned workers = 1;
        std::string output_path; // empty: stdout

        /// N values actually swept: n_values, or {8, 64, 512} for sweep-k and {8, ..., 1024} for sweep-n.
        std::vector<std::size_t> effective_n_values() const;

        void validate() const;
    };

    /// Merges the optional "experiment" section of a config file into `spec`
    /// (and the "scenario" section, or a flat scenario object), then validates the result.
    /// Throws std::invalid_argument.
    void apply_experiment_json(const nlohmann::json &j, ExperimentSpec &spec);

    struct CurveRow
    {
        double beta;
        double rate_original;
        double rate_surrogate_order1;
        double rate_surrogate_order3;
    };

    struct SweepKRow
    {
        std::size_t num_irs_elements;
        std::size_t num_inits;
        double mean_rate_esmpi_ga;
        double mean_rate_es;
    };

    struct SweepNRow
    {
        std::size_t num_irs_elements;
        std::vector<double> mean_rates; // one per spec.solvers entry
    };

    /// Mean rate of the exact objective and of its order-1 / order-3 surrogates over a beta grid.
    std::vector<CurveRow> run_curve(const ExperimentSpec &spec);

    /// Mean ESMPI-GA rate versus the number of starts K, with the ES reference, for each N.
    std::vector<SweepKRow> run_sweep_k(const ExperimentSpec &spec);

    /// Mean rate of every requested solver versus N.
    std::vector<SweepNRow> run_sweep_n(const ExperimentSpec &spec);

    /// All requested solvers on the first trial's channel draw.
    std::vector<PASolution> solve_once(const ExperimentSpec &spec);

    /// Single comment line describing the run: version, kind, scenario fingerprint, seed, trials, power.
    std::string metadata_line(const ExperimentSpec &spec);

    void write_curve_csv(std::ostream &os, const ExperimentSpec &spec, const std::vector<CurveRow> &rows);
    void write_sweep_k_csv(std::ostream &os, const ExperimentSpec &spec, const std::vector<SweepKRow> &rows);
    void write_sweep_n_csv(std::ostream &os, const ExperimentSpec &spec, const std::vector<SweepNRow> &rows);
    void write_solve_csv(std::ostream &os, const ExperimentSpec &spec, const std::vector<PASolution> &rows);

    /// Channel draw, beamforming design and objective coefficients of trial `trial`.
    ObjectiveCoefficients trial_coefficients(const Scenario &scenario, std::uint64_t master_seed, std::uint64_t trial);

    /// Reduced oracle suites; writes one PASS/FAIL line per check and returns true when all pass.
    bool run_selftest(std::uint64_t seed, std::ostream &log);
}

#endif
