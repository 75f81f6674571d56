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

#include "irspa/taylor.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace irspa
{
    namespace
    {
        // Runs fn(t) for every trial index and returns results in trial order, whatever the worker count.
        template <typename Result, typename Fn>
        std::vector<Result> run_trials(std::size_t trials, unsigned workers, Fn fn)
        {
            std::vector<Result> results(trials);
            const unsigned pool = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(trials)));
            if (pool == 1)
            {
                for (std::size_t t = 0; t < trials; ++t)
                    results[t] = fn(t);
                return results;
            }

            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::thread> threads;
            threads.reserve(pool);
            for (unsigned w = 0; w < pool; ++w)
                threads.emplace_back([&]
                                     {
                    for (std::size_t t = next++; t < trials; t = next++)
                    {
                        try
                        {
                            results[t] = fn(t);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                        }
                    } });
            for (auto &th : threads)
                th.join();
            if (failure)
                std::rethrow_exception(failure);
            return results;
        }

        std::string fmt(double x)
        {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", x);
            return buf;
        }

        std::vector<std::size_t> read_sizes(const nlohmann::json &v, const char *key)
        {
            if (!v.is_array() || v.empty())
                throw std::invalid_argument(std::string("Experiment config: '") + key + "' must be a nonempty array");
            std::vector<std::size_t> out;
            for (const auto &x : v)
            {
                if (!x.is_number_integer() || x.get<long long>() < 1)
                    throw std::invalid_argument(std::string("Experiment config: '") + key + "' entries must be positive integers");
                out.push_back(x.get<std::size_t>());
            }
            return out;
        }

        double read_double(const nlohmann::json &v, const char *key)
        {
            if (!v.is_number())
                throw std::invalid_argument(std::string("Experiment config: '") + key + "' must be a number");
            return v.get<double>();
        }

        std::size_t read_size(const nlohmann::json &v, const char *key)
        {
            if (!v.is_number_integer() || v.get<long long>() < 1)
                throw std::invalid_argument(std::string("Experiment config: '") + key + "' must be a positive integer");
            return v.get<std::size_t>();
        }
    }

    std::string_view to_string(ExperimentKind kind)
    {
        switch (kind)
        {
        case ExperimentKind::Solve:
            return "solve";
        case ExperimentKind::Curve:
            return "curve";
        case ExperimentKind::SweepK:
            return "sweep-k";
        case ExperimentKind::SweepN:
            return "sweep-n";
        }
        return "unknown";
    }

    std::vector<std::size_t> ExperimentSpec::effective_n_values() const
    {
        if (!n_values.empty())
            return n_values;
        if (kind == ExperimentKind::SweepK)
            return {8, 64, 512};
        return {8, 16, 32, 64, 128, 256, 512, 1024};
    }

    void ExperimentSpec::validate() const
    {
        scenario.validate();
        settings.ga.validate();
        if (trials < 1)
            throw std::invalid_argument("ExperimentSpec: trials must be >= 1");
        if (solvers.empty())
            throw std::invalid_argument("ExperimentSpec: solver list is empty");
        if (k_values.empty() || std::find(k_values.begin(), k_values.end(), std::size_t{0}) != k_values.end())
            throw std::invalid_argument("ExperimentSpec: k_values must be nonempty and positive");
        if (std::find(n_values.begin(), n_values.end(), std::size_t{0}) != n_values.end())
            throw std::invalid_argument("ExperimentSpec: n_values must be positive");
        if (curve_points < 2)
            throw std::invalid_argument("ExperimentSpec: curve_points must be >= 2");
        if (settings.es_grid_points < 2)
            throw std::invalid_argument("ExperimentSpec: es_grid_points must be >= 2");
        if (!(settings.taylor_point > 0.0 && settings.taylor_point < 1.0))
            throw std::invalid_argument("ExperimentSpec: taylor_point must lie in (0, 1)");
        if (!(settings.fixed_beta >= 0.0 && settings.fixed_beta <= 1.0))
            throw std::invalid_argument("ExperimentSpec: fixed_beta must lie in [0, 1]");
    }

    void apply_experiment_json(const nlohmann::json &j, ExperimentSpec &spec)
    {
        if (!j.is_object())
            throw std::invalid_argument("Experiment config: expected a JSON object");

        if (!j.contains("scenario") && !j.contains("experiment"))
        {
            spec.scenario = scenario_from_json(j);
            spec.validate();
            return;
        }
        for (const auto &[key, value] : j.items())
            if (key != "scenario" && key != "experiment")
                throw std::invalid_argument("Experiment config: unknown top-level key '" + key + "'");

        if (j.contains("scenario"))
            spec.scenario = scenario_from_json(j.at("scenario"));
        if (!j.contains("experiment"))
        {
            spec.validate();
            return;
        }

        const auto &ex = j.at("experiment");
        if (!ex.is_object())
            throw std::invalid_argument("Experiment config: 'experiment' must be an object");
        for (const auto &[key, value] : ex.items())
        {
            if (key == "trials")
                spec.trials = read_size(value, "trials");
            else if (key == "seed")
            {
                if (!value.is_number_unsigned())
                    throw std::invalid_argument("Experiment config: 'seed' must be a nonnegative integer");
                spec.master_seed = value.get<std::uint64_t>();
            }
            else if (key == "workers")
                spec.workers = static_cast<unsigned>(read_size(value, "workers"));
            else if (key == "k_values")
                spec.k_values = read_sizes(value, "k_values");
            else if (key == "n_values")
                spec.n_values = read_sizes(value, "n_values");
            else if (key == "curve_points")
                spec.curve_points = read_size(value, "curve_points");
            else if (key == "es_grid_points")
                spec.settings.es_grid_points = read_size(value, "es_grid_points");
            else if (key == "taylor_point")
                spec.settings.taylor_point = read_double(value, "taylor_point");
            else if (key == "fixed_beta")
                spec.settings.fixed_beta = read_double(value, "fixed_beta");
            else if (key == "solvers")
            {
                if (!value.is_array() || value.empty())
                    throw std::invalid_argument("Experiment config: 'solvers' must be a nonempty array");
                spec.solvers.clear();
                for (const auto &name : value)
                {
                    const auto id = name.is_string() ? parse_solver_id(name.get<std::string>()) : std::nullopt;
                    if (!id)
                        throw std::invalid_argument("Experiment config: unknown solver " + name.dump());
                    spec.solvers.push_back(*id);
                }
            }
            else if (key == "ga")
            {
                if (!value.is_object())
                    throw std::invalid_argument("Experiment config: 'ga' must be an object");
                for (const auto &[gk, gv] : value.items())
                {
                    if (gk == "num_inits")
                        spec.settings.ga.num_inits = read_size(gv, "num_inits");
                    else if (gk == "step_length")
                        spec.settings.ga.step_length = read_double(gv, "step_length");
                    else if (gk == "accuracy")
                        spec.settings.ga.accuracy = read_double(gv, "accuracy");
                    else if (gk == "max_iters_per_init")
                        spec.settings.ga.max_iters_per_init = read_size(gv, "max_iters_per_init");
                    else
                        throw std::invalid_argument("Experiment config: unknown ga key '" + gk + "'");
                }
            }
            else
                throw std::invalid_argument("Experiment config: unknown experiment key '" + key + "'");
        }
        spec.validate();
    }

    ObjectiveCoefficients trial_coefficients(const Scenario &scenario, std::uint64_t master_seed, std::uint64_t trial)
    {
        const ChannelRealization ch = generate_channels(scenario, trial_seed(master_seed, trial));
        return compute_coefficients(scenario, ch, design_beamforming(ch));
    }

    std::vector<CurveRow> run_curve(const ExperimentSpec &spec)
    {
        spec.validate();
        const std::size_t points = spec.curve_points;
        auto beta_at = [&](std::size_t i)
        { return (i + 1 == points) ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1); };

        using PerTrial = std::vector<std::array<double, 3>>;
        const auto per_trial = run_trials<PerTrial>(spec.trials, spec.workers, [&](std::size_t t)
                                                   {
            const ObjectiveCoefficients c = trial_coefficients(spec.scenario, spec.master_seed, t);
            const TaylorExpansion te = expand_q(c, spec.settings.taylor_point);
            PerTrial rates(points);
            for (std::size_t i = 0; i < points; ++i)
            {
                const double beta = beta_at(i);
                rates[i] = {rate(f_rational(c, beta)),
                            rate(std::max(0.0, f_surrogate(te, c, beta, 1))),
                            rate(std::max(0.0, f_surrogate(te, c, beta, 3)))};
            }
            return rates; });

        std::vector<CurveRow> rows(points);
        const double inv = 1.0 / static_cast<double>(spec.trials);
        for (std::size_t i = 0; i < points; ++i)
        {
            std::array<double, 3> sum{};
            for (const auto &trial : per_trial)
                for (int k = 0; k < 3; ++k)
                    sum[k] += trial[i][k];
            rows[i] = {beta_at(i), sum[0] * inv, sum[1] * inv, sum[2] * inv};
        }
        return rows;
    }

    std::vector<SweepKRow> run_sweep_k(const ExperimentSpec &spec)
    {
        spec.validate();
        std::vector<SweepKRow> rows;
        const double inv = 1.0 / static_cast<double>(spec.trials);
        for (std::size_t n : spec.effective_n_values())
        {
            Scenario sc = spec.scenario;
            sc.num_irs_elements = static_cast<unsigned>(n);

            // Per trial: ES rate followed by one ESMPI-GA rate per K.
            const auto per_trial = run_trials<std::vector<double>>(spec.trials, spec.workers, [&](std::size_t t)
                                                                   {
                const ObjectiveCoefficients c = trial_coefficients(sc, spec.master_seed, t);
                std::vector<double> out;
                out.push_back(solve_es(c, spec.settings.es_grid_points).rate_bits);
                for (std::size_t k : spec.k_values)
                {
                    GAConfig cfg = spec.settings.ga;
                    cfg.num_inits = k;
                    out.push_back(solve_esmpi_ga(c, cfg).rate_bits);
                }
                return out; });

            for (std::size_t ki = 0; ki < spec.k_values.size(); ++ki)
            {
                double es = 0.0, ga = 0.0;
                for (const auto &r : per_trial)
                {
                    es += r[0];
                    ga += r[ki + 1];
                }
                rows.push_back({n, spec.k_values[ki], ga * inv, es * inv});
            }
        }
        return rows;
    }

    std::vector<SweepNRow> run_sweep_n(const ExperimentSpec &spec)
    {
        spec.validate();
        std::vector<SweepNRow> rows;
        const double inv = 1.0 / static_cast<double>(spec.trials);
        for (std::size_t n : spec.effective_n_values())
        {
            Scenario sc = spec.scenario;
            sc.num_irs_elements = static_cast<unsigned>(n);
            const auto per_trial = run_trials<std::vector<double>>(spec.trials, spec.workers, [&](std::size_t t)
                                                                   {
                const ObjectiveCoefficients c = trial_coefficients(sc, spec.master_seed, t);
                std::vector<double> out;
                for (SolverId id : spec.solvers)
                    out.push_back(solve(id, c, spec.settings).rate_bits);
                return out; });

            SweepNRow row{n, std::vector<double>(spec.solvers.size(), 0.0)};
            for (const auto &r : per_trial)
                for (std::size_t s = 0; s < r.size(); ++s)
                    row.mean_rates[s] += r[s];
            for (double &m : row.mean_rates)
                m *= inv;
            rows.push_back(std::move(row));
        }
        return rows;
    }

    std::vector<PASolution> solve_once(const ExperimentSpec &spec)
    {
        spec.validate();
        const ObjectiveCoefficients c = trial_coefficients(spec.scenario, spec.master_seed, 0);
        std::vector<PASolution> out;
        for (SolverId id : spec.solvers)
            out.push_back(solve(id, c, spec.settings));
        return out;
    }

    std::string metadata_line(const ExperimentSpec &spec)
    {
        char buf[512];
        std::snprintf(buf, sizeof(buf),
                      "# irspa version=%s kind=%s scenario_hash=%016llx master_seed=%llu trials=%zu "
                      "num_bs_antennas=%u num_irs_elements=%u total_power_w=%s reference_gain_db=%s",
                      IRSPA_VERSION, std::string(to_string(spec.kind)).c_str(),
                      static_cast<unsigned long long>(spec.scenario.fingerprint()),
                      static_cast<unsigned long long>(spec.master_seed), spec.trials,
                      spec.scenario.num_bs_antennas, spec.scenario.num_irs_elements,
                      fmt(spec.scenario.total_power).c_str(), fmt(spec.scenario.reference_gain_db).c_str());
        return buf;
    }

    void write_curve_csv(std::ostream &os, const ExperimentSpec &spec, const std::vector<CurveRow> &rows)
    {
        os << metadata_line(spec) << '\n';
        os << "beta,rate_original,rate_surrogate_order1,rate_surrogate_order3\n";
        for (const auto &r : rows)
            os << fmt(r.beta) << ',' << fmt(r.rate_original) << ',' << fmt(r.rate_surrogate_order1) << ','
               << fmt(r.rate_surrogate_order3) << '\n';
    }

    void write_sweep_k_csv(std::ostream &os, const ExperimentSpec &spec, const std::vector<SweepKRow> &rows)
    {
        os << metadata_line(spec) << '\n';
        os << "N,K,mean_rate_esmpi_ga,mean_rate_es\n";
        for (const auto &r : rows)
            os << r.num_irs_elements << ',' << r.num_inits << ',' << fmt(r.mean_rate_esmpi_ga) << ','
               << fmt(r.mean_rate_es) << '\n';
    }

    void write_sweep_n_csv(std::ostream &os, const ExperimentSpec &spec, const std::vector<SweepNRow> &rows)
    {
        os << metadata_line(spec) << '\n';
        os << 'N';
        for (SolverId id : spec.solvers)
            os << ",mean_rate_" << to_string(id);
        os << '\n';
        for (const auto &r : rows)
        {
            os << r.num_irs_elements;
            for (double m : r.mean_rates)
                os << ',' << fmt(m);
            os << '\n';
        }
    }

    void write_solve_csv(std::ostream &os, const ExperimentSpec &spec, const std::vector<PASolution> &rows)
    {
        os << metadata_line(spec) << '\n';
        os << "solver,beta_opt,snr,rate_bits,evals,iterations\n";
        for (const auto &s : rows)
            os << to_string(s.solver_id) << ',' << fmt(s.beta_opt) << ',' << fmt(s.snr) << ','
               << fmt(s.rate_bits) << ',' << s.evals << ',' << s.iterations << '\n';
    }
}
