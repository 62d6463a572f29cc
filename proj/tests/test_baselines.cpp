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
#include <doctest.h>

#include <cmath>

#include "rumorctl/baselines.hpp"
#include "test_helpers.hpp"

using namespace rumorctl;
using namespace rumorctl::testing;

TEST_SUITE_BEGIN("baselines");

TEST_CASE("static control level and spend")
{
    const ControlBudget budget = reference_budget();
    const TimeGrid grid(kHorizon, 1000);
    const ControlSignal u = static_control(budget, grid);

    // u_stat = sqrt(B/T) = u_max / sqrt(8)
    CHECK(std::abs(u.values[0] - 0.06 / std::sqrt(8.0)) < 1e-15);
    CHECK((u.values == u.values[0]).all());
    CHECK(std::abs(budget_spent(u, budget.cost) - budget.total) < 1e-15);
}

TEST_CASE("static control edge cases")
{
    const TimeGrid grid(kHorizon, 100);

    SUBCASE("full budget gives the cap")
    {
        const ControlBudget budget = reference_budget(0.018);
        CHECK(static_control(budget, grid).values[0] == doctest::Approx(0.06).epsilon(1e-14));
    }
    SUBCASE("over-budget static level is infeasible")
    {
        const ControlBudget budget = reference_budget(0.02); // c^-1(B/T) > u_max
        CHECK_THROWS_AS(static_control(budget, grid), std::invalid_argument);
    }
    SUBCASE("zero budget degenerates to no control")
    {
        const ControlBudget budget = reference_budget(0.0);
        CHECK((static_control(budget, grid).values == 0.0).all());
    }
}

TEST_CASE("reported baseline costs")
{
    const ControlBudget budget = reference_budget();
    const TimeGrid grid(kHorizon, 1000);

    SUBCASE("strong epidemic")
    {
        const EpidemicParams p = reference_params(1.2, 0.1);
        const StrategyOutcome st =
            evaluate_strategy(p, static_control(budget, grid), budget.cost);
        const StrategyOutcome nc = evaluate_strategy(p, no_control(grid), budget.cost);
        CHECK(std::abs(st.terminal_cost - 0.0909) < 2e-3);
        CHECK(std::abs(nc.terminal_cost - 0.2150) < 2e-3);
        CHECK(std::abs(st.spend - budget.total) < 1e-6 * budget.total);
        CHECK(nc.spend == 0.0);
    }
    SUBCASE("mild epidemic")
    {
        const EpidemicParams p = reference_params(0.2, 0.1);
        const StrategyOutcome st =
            evaluate_strategy(p, static_control(budget, grid), budget.cost);
        const StrategyOutcome nc = evaluate_strategy(p, no_control(grid), budget.cost);
        CHECK(std::abs(st.terminal_cost - 0.8178) < 2e-3);
        CHECK(std::abs(nc.terminal_cost - 0.9733) < 2e-3);
    }
    SUBCASE("no spreading at all")
    {
        const EpidemicParams p(SpreadingProfile::constant(0.0), 0.1, 0.5, 0.01, kHorizon);
        const StrategyOutcome nc = evaluate_strategy(p, no_control(grid), budget.cost);
        CHECK(nc.terminal_cost == 1.0 - 0.01);
    }
    SUBCASE("fully frozen system")
    {
        const EpidemicParams p(SpreadingProfile::constant(0.0), 0.0, 0.5, 0.5, kHorizon);
        const StrategyOutcome nc = evaluate_strategy(p, no_control(grid), budget.cost);
        CHECK(nc.terminal_cost == 0.5);
        CHECK(nc.spend == 0.0);
    }
}

TEST_CASE("control only helps: J(no control) >= J(static)")
{
    const ControlBudget budget = reference_budget();
    const TimeGrid grid(kHorizon, 800);
    for (auto [beta, gamma] :
         {std::pair{1.2, 0.1}, {0.2, 0.1}, {4.0, 6.0}, {0.8, 0.1}, {0.8, 2.0}}) {
        const EpidemicParams p = reference_params(beta, gamma);
        const Real J_static =
            evaluate_strategy(p, static_control(budget, grid), budget.cost).terminal_cost;
        const Real J_none = evaluate_strategy(p, no_control(grid), budget.cost).terminal_cost;
        CHECK(J_none >= J_static);
    }
}

TEST_SUITE_END();
