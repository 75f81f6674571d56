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

// irspa command-line front end: solve, curve, sweep-k, sweep-n, selftest.

#include "irspa/bench.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    constexpr int kExitConfigError = 1;
    constexpr int kExitSelfTestFailure = 2;

    std::vector<irspa::SolverId> parse_solver_list(const std::string &list)
    {
        std::vector<irspa::SolverId> out;
        std::stringstream ss(list);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            if (item.empty())
                continue;
            const auto id = irspa::parse_solver_id(item);
            if (!id)
                throw std::invalid_argument("unknown solver '" + item + "'");
            out.push_back(*id);
        }
        if (out.empty())
            throw std::invalid_argument("--solvers list is empty");
        return out;
    }

    void emit(const irspa::ExperimentSpec &spec, const std::function<void(std::ostream &)> &writer)
    {
        if (spec.output_path.empty())
        {
            writer(std::cout);
            return;
        }
        std::ofstream out(spec.output_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + spec.output_path + "'");
        writer(out);
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Power allocation between a base station and an active IRS"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::string solvers;
    std::string out_path;
    unsigned workers = 0;

    auto add_common = [&](CLI::App *sub, bool experiment)
    {
        sub->add_option("--config", config_path, "JSON scenario / experiment config");
        sub->add_option("--seed", seed, "master seed (u64)");
        if (experiment)
        {
            sub->add_option("--trials", trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
            sub->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
        }
        sub->add_option("--solvers", solvers, "comma list of es,ga,esmpi_ga,tte,epa,fixed");
        sub->add_option("--out", out_path, "CSV output path (default stdout)");
    };

    auto *solve_cmd = app.add_subcommand("solve", "run solvers on one channel draw");
    auto *curve_cmd = app.add_subcommand("curve", "rate versus beta with Taylor surrogates");
    auto *sweep_k_cmd = app.add_subcommand("sweep-k", "ESMPI-GA rate versus the number of starts K");
    auto *sweep_n_cmd = app.add_subcommand("sweep-n", "solver rates versus the number of IRS elements N");
    auto *selftest_cmd = app.add_subcommand("selftest", "run the built-in oracle checks");
    add_common(solve_cmd, false);
    add_common(curve_cmd, true);
    add_common(sweep_k_cmd, true);
    add_common(sweep_n_cmd, true);
    selftest_cmd->add_option("--seed", seed, "seed for the randomized checks");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitConfigError;
    }

    if (selftest_cmd->parsed())
    {
        const bool ok = irspa::run_selftest(selftest_cmd->count("--seed") ? seed : 20260101, std::cout);
        return ok ? 0 : kExitSelfTestFailure;
    }

    irspa::ExperimentSpec spec;
    CLI::App *active = nullptr;
    if (solve_cmd->parsed())
    {
        spec.kind = irspa::ExperimentKind::Solve;
        active = solve_cmd;
    }
    else if (curve_cmd->parsed())
    {
        spec.kind = irspa::ExperimentKind::Curve;
        active = curve_cmd;
    }
    else if (sweep_k_cmd->parsed())
    {
        spec.kind = irspa::ExperimentKind::SweepK;
        active = sweep_k_cmd;
    }
    else
    {
        spec.kind = irspa::ExperimentKind::SweepN;
        active = sweep_n_cmd;
    }

    try
    {
        if (!config_path.empty())
        {
            std::ifstream in(config_path);
            if (!in)
                throw std::runtime_error("cannot open config '" + config_path + "'");
            nlohmann::json j;
            try
            {
                in >> j;
            }
            catch (const nlohmann::json::parse_error &e)
            {
                throw std::runtime_error("malformed config '" + config_path + "': " + e.what());
            }
            irspa::apply_experiment_json(j, spec);
        }
        auto given = [&](const char *flag)
        {
            const CLI::Option *opt = active->get_option_no_throw(flag);
            return opt != nullptr && opt->count() > 0;
        };
        if (given("--seed"))
            spec.master_seed = seed;
        if (given("--trials"))
            spec.trials = trials;
        if (given("--workers"))
            spec.workers = workers;
        if (given("--solvers"))
            spec.solvers = parse_solver_list(solvers);
        if (given("--out"))
            spec.output_path = out_path;
        spec.validate();
    }
    catch (const std::exception &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try
    {
        switch (spec.kind)
        {
        case irspa::ExperimentKind::Solve:
        {
            const auto rows = irspa::solve_once(spec);
            emit(spec, [&](std::ostream &os)
                 { irspa::write_solve_csv(os, spec, rows); });
            break;
        }
        case irspa::ExperimentKind::Curve:
        {
            const auto rows = irspa::run_curve(spec);
            emit(spec, [&](std::ostream &os)
                 { irspa::write_curve_csv(os, spec, rows); });
            break;
        }
        case irspa::ExperimentKind::SweepK:
        {
            const auto rows = irspa::run_sweep_k(spec);
            emit(spec, [&](std::ostream &os)
                 { irspa::write_sweep_k_csv(os, spec, rows); });
            break;
        }
        case irspa::ExperimentKind::SweepN:
        {
            const auto rows = irspa::run_sweep_n(spec);
            emit(spec, [&](std::ostream &os)
                 { irspa::write_sweep_n_csv(os, spec, rows); });
            break;
        }
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return 0;
}
