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
#include "rumorctl/experiments.hpp"

namespace rumorctl {

const char* to_string(SweepParameter p)
{
    switch (p) {
    case SweepParameter::budget:
        return "budget";
    case SweepParameter::beta:
        return "beta";
    case SweepParameter::gamma:
        return "gamma";
    case SweepParameter::horizon:
        return "horizon";
    case SweepParameter::s0:
        return "s0";
    case SweepParameter::u_max:
        return "u_max";
    case SweepParameter::alpha:
        return "alpha";
    }
    return "?";
}

SweepParameter sweep_parameter_from_string(const std::string& name)
{
    for (SweepParameter p :
         {SweepParameter::budget, SweepParameter::beta, SweepParameter::gamma,
          SweepParameter::horizon, SweepParameter::s0, SweepParameter::u_max,
          SweepParameter::alpha}) {
        if (name == to_string(p)) {
            return p;
        }
    }
    throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

Scenario derive_scenario(const SweepSpec& spec, Real value)
{
    const Scenario& base = spec.base;
    SpreadingProfile profile = base.params.profile;
    Real gamma = base.params.gamma;
    Real alpha = base.params.alpha;
    Real s0 = base.params.s0;
    Real horizon = base.params.horizon;
    Real u_max = base.budget.u_max;
    Real total = base.budget.total;

    switch (spec.parameter) {
    case SweepParameter::budget:
        total = value;
        break;
    case SweepParameter::beta:
        if (profile.kind() != SpreadingProfile::Kind::constant) {
            throw std::invalid_argument("beta sweep requires a constant spreading profile");
        }
        profile = SpreadingProfile::constant(value);
        break;
    case SweepParameter::gamma:
        gamma = value;
        break;
    case SweepParameter::horizon:
        // Budget stays at the base value; it is not rescaled with T.
        horizon = value;
        break;
    case SweepParameter::s0:
        s0 = value;
        break;
    case SweepParameter::u_max:
        // B and T stay fixed while the cap moves.
        u_max = value;
        break;
    case SweepParameter::alpha:
        alpha = value;
        break;
    }

    return Scenario{EpidemicParams(profile, gamma, alpha, s0, horizon),
                    ControlBudget(base.budget.cost, u_max, total), base.config};
}

std::vector<SweepRow> run_parameter_sweep(const SweepSpec& spec)
{
    if (spec.values.empty()) {
        throw std::invalid_argument("run_parameter_sweep: value list is empty");
    }
    for (std::size_t j = 1; j < spec.values.size(); ++j) {
        if (!(spec.values[j] > spec.values[j - 1])) {
            throw std::invalid_argument("run_parameter_sweep: values must be strictly increasing");
        }
    }

    std::vector<SweepRow> rows;
    rows.reserve(spec.values.size());
    for (Real value : spec.values) {
        SweepRow row;
        row.value = value;
        try {
            const Scenario sc = derive_scenario(spec, value);
            const TimeGrid grid = sc.config.grid(sc.params.horizon);
            row.J_nocontrol =
                evaluate_strategy(sc.params, no_control(grid), sc.budget.cost).terminal_cost;
            row.J_static =
                evaluate_strategy(sc.params, static_control(sc.budget, grid), sc.budget.cost)
                    .terminal_cost;
            const SolveResult solved = solve_optimal(sc.params, sc.budget, sc.config);
            row.J_optimal = solved.terminal_cost;
            row.spend_optimal = solved.spend;
            row.bisect_iters = solved.bisection_iterations;
        }
        catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

ShapeStudy run_shape_study(const EpidemicParams& params, const ControlBudget& budget,
                           const SweepConfig& cfg)
{
    const SolveResult solved = solve_optimal(params, budget, cfg);
    const TimeGrid grid = solved.control.grid;
    const Real J_static =
        evaluate_strategy(params, static_control(budget, grid), budget.cost).terminal_cost;
    const Real J_nocontrol =
        evaluate_strategy(params, no_control(grid), budget.cost).terminal_cost;
    return ShapeStudy{solved.control, solved.trajectory.spend, solved.terminal_cost, J_static,
                      J_nocontrol};
}

} // namespace rumorctl
