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
#ifndef RUMORCTL_BASELINES_HPP
#define RUMORCTL_BASELINES_HPP

#include "rumorctl/integrator.hpp"

namespace rumorctl {

/// Constant control spending exactly the budget: u = c^-1(B / T) at every
/// node. Throws std::invalid_argument when that level exceeds u_max.
ControlSignal static_control(const ControlBudget& budget, const TimeGrid& grid);

/// The do-nothing strategy, u = 0.
ControlSignal no_control(const TimeGrid& grid);

struct StrategyOutcome {
    Real terminal_cost; // J = i(T)
    Real spend;         // b(T)
};

/// Forward-integrates a strategy and reports terminal cost and total spend.
StrategyOutcome evaluate_strategy(const EpidemicParams& params, const ControlSignal& control,
                                  const CostFunction& cost);

} // namespace rumorctl

#endif // RUMORCTL_BASELINES_HPP
