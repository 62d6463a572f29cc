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
#include "rumorctl/baselines.hpp"

namespace rumorctl {

ControlSignal static_control(const ControlBudget& budget, const TimeGrid& grid)
{
    Real level = budget.cost.inverse(budget.total / grid.horizon);
    // rounding slack so B = c(u_max) * T lands exactly on the cap
    if (level > budget.u_max && level <= budget.u_max * (1.0 + 1e-12)) {
        level = budget.u_max;
    }
    if (level > budget.u_max) {
        throw std::invalid_argument("static control infeasible: c^-1(B/T) exceeds u_max");
    }
    return ControlSignal(grid, Array::Constant(grid.n_nodes(), level));
}

ControlSignal no_control(const TimeGrid& grid)
{
    return ControlSignal::zero(grid);
}

StrategyOutcome evaluate_strategy(const EpidemicParams& params, const ControlSignal& control,
                                  const CostFunction& cost)
{
    const Trajectory traj = integrate_forward(params, control, cost);
    return StrategyOutcome{traj.terminal_ignorants(), traj.total_spend()};
}

} // namespace rumorctl
