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
#include <random>

#include "rumorctl/control.hpp"
#include "test_helpers.hpp"

using namespace rumorctl;

TEST_SUITE_BEGIN("control");

TEST_CASE("quadratic cost closed forms")
{
    const CostFunction c = quadratic_cost();
    CHECK(c.evaluate(0.06) == doctest::Approx(0.0036).epsilon(1e-15));
    CHECK(c.derivative_inverse(1.0) == 0.5);
    CHECK(c.inverse(0.0036) == doctest::Approx(0.06).epsilon(1e-15));
    CHECK(c.evaluate(0.0) == 0.0);
    CHECK_THROWS_AS(c.inverse(-1e-9), std::domain_error);
}

TEST_CASE("derivative_inverse round trip on (0, u_max]")
{
    const CostFunction c = quadratic_cost();
    for (int j = 1; j <= 50; ++j) {
        const Real u = 0.06 * j / 50.0;
        const Real cprime = 2.0 * u;
        CHECK(std::abs(c.derivative_inverse(cprime) - u) < 1e-12);
    }
}

TEST_CASE("pointwise control law")
{
    const ControlBudget budget = testing::reference_budget();

    SUBCASE("clamps to the cap")
    {
        // numerator = 1, c'^-1(1) = 0.5 > u_max
        CHECK(pointwise_optimal_control(1.0, 0.0, 1.0, 0.0, 1.0, 0.5, budget) == 0.06);
    }
    SUBCASE("zero switching numerator gives zero control")
    {
        CHECK(pointwise_optimal_control(0.4, 0.2, 0.7, 0.7, 2.0, 0.0, budget) == 0.0);
    }
    SUBCASE("negative numerator clamps to zero")
    {
        // numerator = -0.5 - 0.5*0.5*0.3 = -0.65
        CHECK(pointwise_optimal_control(0.5, 0.2, 0.0, 1.0, 1.0, 0.5, budget) == 0.0);
    }
    SUBCASE("interior value")
    {
        // numerator = 0.5, u = 0.25/lambda_b
        const Real u = pointwise_optimal_control(0.5, 0.1, 1.0, 0.0, 10.0, 0.5, budget);
        CHECK(u == doctest::Approx(0.025).epsilon(1e-14));
    }
    SUBCASE("degenerate multiplier is rejected")
    {
        CHECK_THROWS_AS(pointwise_optimal_control(0.5, 0.1, 1.0, 0.0, 0.0, 0.5, budget),
                        SolveError);
        CHECK_THROWS_AS(pointwise_optimal_control(0.5, 0.1, 1.0, 0.0, 1e-13, 0.5, budget),
                        SolveError);
        CHECK_THROWS_AS(pointwise_optimal_control(0.5, 0.1, 1.0, 0.0, -1.0, 0.5, budget),
                        SolveError);
    }
}

TEST_CASE("control law output lies in the box and shrinks with lambda_b")
{
    const ControlBudget budget = testing::reference_budget();
    std::mt19937 rng(42);
    std::uniform_real_distribution<Real> unit(0.0, 1.0);
    std::uniform_real_distribution<Real> lam(-2.0, 2.0);

    for (int trial = 0; trial < 300; ++trial) {
        const Real i = unit(rng);
        const Real s = unit(rng) * (1.0 - i);
        const Real li = lam(rng);
        const Real ls = lam(rng);
        Real prev = budget.u_max + 1.0;
        for (const Real lb : {0.1, 1.0, 10.0, 100.0}) {
            const Real u = pointwise_optimal_control(i, s, li, ls, lb, 0.5, budget);
            CHECK(u >= 0.0);
            CHECK(u <= budget.u_max);
            CHECK(u <= prev); // non-increasing in lambda_b for quadratic cost
            prev = u;
        }
    }
}

TEST_CASE("budget_spent quadrature")
{
    const CostFunction c = quadratic_cost();
    const TimeGrid grid(5.0, 1000);

    SUBCASE("zero control costs nothing")
    {
        CHECK(budget_spent(ControlSignal::zero(grid), c) == 0.0);
    }
    SUBCASE("full-strength control costs c(u_max) * T")
    {
        const ControlSignal u(grid, Array::Constant(grid.n_nodes(), 0.06));
        CHECK(budget_spent(u, c) == doctest::Approx(0.018).epsilon(1e-13));
    }
    SUBCASE("static control spends exactly the budget")
    {
        const Real level = std::sqrt(testing::kBudgetValue / 5.0);
        const ControlSignal u(grid, Array::Constant(grid.n_nodes(), level));
        CHECK(budget_spent(u, c) == doctest::Approx(testing::kBudgetValue).epsilon(1e-13));
    }
}

TEST_CASE("signal interpolation is linear between nodes")
{
    const TimeGrid grid(5.0, 5);
    Array v(6);
    v << 0.0, 0.01, 0.02, 0.05, 0.03, 0.0;
    const ControlSignal u(grid, v);
    CHECK(u.at(0.0) == 0.0);
    CHECK(u.at(5.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(u.at(0.5) == doctest::Approx(0.005).epsilon(1e-14));
    CHECK(u.at(2.5) == doctest::Approx(0.035).epsilon(1e-14));
    CHECK(u.at(3.0) == doctest::Approx(0.05).epsilon(1e-14));
}

TEST_CASE("construction guards")
{
    CHECK_THROWS_AS(ControlBudget(quadratic_cost(), 0.0, 0.001), std::invalid_argument);
    CHECK_THROWS_AS(ControlBudget(quadratic_cost(), 0.06, -0.001), std::invalid_argument);
    CHECK_NOTHROW(ControlBudget(quadratic_cost(), 0.06, 0.0)); // B = 0 is allowed for baselines
    CHECK_THROWS_AS(ControlSignal(TimeGrid(5.0, 10), Array::Zero(5)), std::invalid_argument);
}

TEST_SUITE_END();
