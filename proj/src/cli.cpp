/*
 * Copyright (C) 2026 rumorctl contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "rumorctl/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rumorctl/config.hpp"
#include "rumorctl/csv.hpp"
#include "rumorctl/oracle.hpp"

namespace rumorctl {

namespace {

struct CommandOptions {
    std::string config_path;
    std::string out_path;
    std::string control_path;
    std::vector<std::string> overrides;
};

ScenarioConfig load_config(const CommandOptions& opt)
{
    std::string text;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) {
            throw std::invalid_argument("cannot open config file '" + opt.config_path + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    std::vector<std::pair<std::string, std::string>> overrides;
    overrides.reserve(opt.overrides.size());
    for (const std::string& item : opt.overrides) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("--set expects key=value, got '" + item + "'");
        }
        overrides.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return parse_config(text, overrides);
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    return out;
}

std::string output_path(const CommandOptions& opt, const ScenarioConfig& cfg,
                        const char* fallback)
{
    if (!opt.out_path.empty()) {
        return opt.out_path;
    }
    if (!cfg.out.empty()) {
        return cfg.out;
    }
    return fallback;
}

void warn_if_unconverged(const SolveResult& result, std::ostream& diag)
{
    if (!result.inner_converged && !result.change_norms.empty()) {
        diag << "warning: inner sweep did not settle within N_sweep iterations (final control "
                "change "
             << format_number(result.change_norms.back()) << ")\n";
    }
}

void cmd_solve(const ScenarioConfig& cfg, const std::string& out_path, std::ostream& diag)
{
    const Scenario sc = cfg.scenario();
    const SolveResult result = solve_optimal(sc.params, sc.budget, sc.config);
    warn_if_unconverged(result, diag);

    std::ofstream out = open_output(out_path);
    write_trajectory_csv(out, result.trajectory, result.control);
    diag << "solve: J=" << format_number(result.terminal_cost)
         << " spend=" << format_number(result.spend)
         << " lambda_b=" << format_number(result.budget_multiplier)
         << " bisection_iterations=" << result.bisection_iterations << " -> " << out_path << "\n";
}

void cmd_simulate(const ScenarioConfig& cfg, const std::string& control_path,
                  const std::string& out_path, std::ostream& diag)
{
    const Scenario sc = cfg.scenario();
    std::ifstream in(control_path);
    if (!in) {
        throw std::invalid_argument("cannot open control file '" + control_path + "'");
    }
    const std::vector<ControlSample> samples = read_control_csv(in);
    ControlSignal control = resample_control(samples, sc.config.grid(sc.params.horizon));
    const Real box_slack = 1e-9 * sc.budget.u_max;
    for (Eigen::Index k = 0; k < control.values.size(); ++k) {
        if (control.values[k] < -box_slack || control.values[k] > sc.budget.u_max + box_slack) {
            throw std::invalid_argument("control file violates 0 <= u <= u_max at sample " +
                                        std::to_string(k));
        }
        control.values[k] = std::clamp(control.values[k], 0.0, sc.budget.u_max);
    }

    const Trajectory state = integrate_forward(sc.params, control, sc.budget.cost);
    const Trajectory traj = integrate_adjoint_backward(sc.params, control, state);
    std::ofstream out = open_output(out_path);
    write_trajectory_csv(out, traj, control);
    diag << "simulate: J=" << format_number(traj.terminal_ignorants())
         << " spend=" << format_number(traj.total_spend()) << " -> " << out_path << "\n";
}

void cmd_baseline(const ScenarioConfig& cfg, const std::string& out_path, std::ostream& diag)
{
    const Scenario sc = cfg.scenario();
    const TimeGrid grid = sc.config.grid(sc.params.horizon);
    std::vector<std::pair<std::string, StrategyOutcome>> outcomes;
    outcomes.emplace_back(
        "no_control", evaluate_strategy(sc.params, no_control(grid), sc.budget.cost));
    outcomes.emplace_back(
        "static", evaluate_strategy(sc.params, static_control(sc.budget, grid), sc.budget.cost));

    std::ofstream out = open_output(out_path);
    write_baseline_csv(out, outcomes);
    diag << "baseline: J_nocontrol=" << format_number(outcomes[0].second.terminal_cost)
         << " J_static=" << format_number(outcomes[1].second.terminal_cost)
         << " static_spend=" << format_number(outcomes[1].second.spend) << " -> " << out_path
         << "\n";
}

void cmd_sweep(const ScenarioConfig& cfg, const std::string& out_path, std::ostream& diag)
{
    if (!cfg.sweep) {
        throw std::invalid_argument("sweep requires 'sweep_param' in the configuration");
    }
    const SweepSpec spec{cfg.sweep->parameter, cfg.sweep->values, cfg.scenario()};
    const std::vector<SweepRow> rows = run_parameter_sweep(spec);

    int failed = 0;
    for (const SweepRow& row : rows) {
        if (!row.ok()) {
            ++failed;
            diag << "warning: " << to_string(spec.parameter) << "=" << format_number(row.value)
                 << " failed: " << row.error << "\n";
        }
    }
    std::ofstream out = open_output(out_path);
    write_sweep_csv(out, rows);
    diag << "sweep " << to_string(spec.parameter) << ": " << rows.size() << " rows, " << failed
         << " failed -> " << out_path << "\n";
}

void cmd_oracle(const ScenarioConfig& cfg, const std::string& out_path, std::ostream& diag)
{
    const Scenario sc = cfg.scenario();
    const SolveResult solved = solve_optimal(sc.params, sc.budget, sc.config);
    warn_if_unconverged(solved, diag);
    const Real J_static =
        evaluate_strategy(sc.params, static_control(sc.budget, solved.control.grid),
                          sc.budget.cost)
            .terminal_cost;
    const OracleResult oracle =
        oracle_search(sc.params, sc.budget, cfg.n_segments, cfg.n_levels, cfg.n_steps);

    std::ofstream out = open_output(out_path);
    write_oracle_report(out, solved.terminal_cost, J_static, oracle, cfg.n_levels);
    diag << "oracle: J_sweep=" << format_number(solved.terminal_cost)
         << " J_oracle=" << format_number(oracle.best_cost)
         << " J_static=" << format_number(J_static) << " -> " << out_path << "\n";
}

void add_common_options(CLI::App* cmd, CommandOptions& opt)
{
    cmd->add_option("--config", opt.config_path, "configuration file (flat key = value lines)");
    cmd->add_option("--out", opt.out_path, "output file path");
    cmd->add_option("--set", opt.overrides, "override a configuration key (key=value)");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& diag)
{
    CLI::App app{"budgeted information-campaign planning for the Maki Thompson rumor model"};
    app.name("rumorctl");
    app.require_subcommand(1);

    CommandOptions opt;
    CLI::App* solve = app.add_subcommand("solve", "compute the optimal campaign schedule");
    CLI::App* simulate = app.add_subcommand("simulate", "integrate a given control signal");
    CLI::App* baseline = app.add_subcommand("baseline", "static and no-control references");
    CLI::App* sweep = app.add_subcommand("sweep", "one-parameter study");
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force check of the solver");
    for (CLI::App* cmd : {solve, simulate, baseline, sweep, oracle}) {
        add_common_options(cmd, opt);
    }
    simulate->add_option("--control", opt.control_path, "control CSV with t and u columns")
        ->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("rumorctl");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&) {
        diag << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const ScenarioConfig cfg = load_config(opt);
        if (solve->parsed()) {
            cmd_solve(cfg, output_path(opt, cfg, "solve.csv"), diag);
        }
        else if (simulate->parsed()) {
            cmd_simulate(cfg, opt.control_path, output_path(opt, cfg, "simulate.csv"), diag);
        }
        else if (baseline->parsed()) {
            cmd_baseline(cfg, output_path(opt, cfg, "baseline.csv"), diag);
        }
        else if (sweep->parsed()) {
            cmd_sweep(cfg, output_path(opt, cfg, "sweep.csv"), diag);
        }
        else if (oracle->parsed()) {
            cmd_oracle(cfg, output_path(opt, cfg, "oracle.csv"), diag);
        }
        return 0;
    }
    catch (const SolveError& e) {
        diag << "solver error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::domain_error& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace rumorctl
