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
#include "rumorctl/oracle.hpp"

#include <cmath>
#include <vector>

namespace rumorctl {

namespace {

constexpr Real kBudgetSlack = 1e-12;

} // namespace

Real evaluate_piecewise(const EpidemicParams& params, const PiecewiseControl& control,
                        int n_steps)
{
    if (control.n_segments < 1 || control.levels.size() != control.n_segments) {
        throw std::invalid_argument("evaluate_piecewise: malformed piecewise control");
    }
    // Align steps with segment boundaries so each step sees one level.
    int steps = n_steps;
    if (steps % control.n_segments != 0) {
        steps += control.n_segments - steps % control.n_segments;
    }
    const TimeGrid grid(params.horizon, steps);
    const Real h = grid.step();

    Vector2 y(1.0 - params.s0, params.s0);
    for (int k = 0; k < steps; ++k) {
        const Real t0 = grid.time(k);
        const Real t1 = grid.time(k + 1);
        const Real tm = 0.5 * (t0 + t1);
        const Real u = control.levels[static_cast<long>(k) * control.n_segments / steps];

        const Vector2 k1 = controlled_rhs(State{y[0], y[1]}, t0, u, params);
        Vector2 z = y + (0.5 * h) * k1;
        const Vector2 k2 = controlled_rhs(State{z[0], z[1]}, tm, u, params);
        z = y + (0.5 * h) * k2;
        const Vector2 k3 = controlled_rhs(State{z[0], z[1]}, tm, u, params);
        z = y + h * k3;
        const Vector2 k4 = controlled_rhs(State{z[0], z[1]}, t1, u, params);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
            throw IntegrationError("piecewise evaluation diverged");
        }
    }
    return y[0];
}

OracleResult oracle_search(const EpidemicParams& params, const ControlBudget& budget,
                           int n_segments, int n_levels, int n_steps)
{
    if (n_segments < 1 || n_segments > 6) {
        throw std::invalid_argument("oracle_search: n_segments must lie in [1, 6]");
    }
    if (n_levels < 2 || n_levels > 16) {
        throw std::invalid_argument("oracle_search: n_levels must lie in [2, 16]");
    }
    const Real horizon = params.horizon;
    const Real max_spend = budget.max_spend(horizon);
    if (budget.total > max_spend + kBudgetSlack) {
        throw std::invalid_argument("oracle_search: budget exceeds c(u_max) * T");
    }

    const Real segment_length = horizon / n_segments;
    const Real max_segment_spend = budget.cost.evaluate(budget.u_max) * segment_length;

    std::vector<Real> level_grid(n_levels);
    for (int j = 0; j < n_levels; ++j) {
        level_grid[j] = budget.u_max * static_cast<Real>(j) / (n_levels - 1);
    }

    OracleResult result;
    result.best_cost = 2.0; // any real candidate beats this
    result.best.n_segments = n_segments;
    result.best.levels = Array::Zero(n_segments);

    PiecewiseControl candidate{n_segments, Array::Zero(n_segments)};
    const int free_segments = n_segments - 1;
    std::vector<int> odometer(free_segments, 0);

    // Lexicographic enumeration of the free segments; the final segment is
    // solved from the residual budget so every candidate exhausts B exactly.
    while (true) {
        Real free_spend = 0.0;
        for (int j = 0; j < free_segments; ++j) {
            candidate.levels[j] = level_grid[odometer[j]];
            free_spend += budget.cost.evaluate(candidate.levels[j]) * segment_length;
        }
        const Real residual = budget.total - free_spend;
        if (residual >= -kBudgetSlack && residual <= max_segment_spend + kBudgetSlack) {
            const Real spend_rate = std::max(residual, 0.0) / segment_length;
            Real last = budget.cost.inverse(spend_rate);
            if (last > budget.u_max) {
                last = budget.u_max;
            }
            candidate.levels[n_segments - 1] = last;
            ++result.candidates;

            const Real cost = evaluate_piecewise(params, candidate, n_steps);
            if (cost < result.best_cost) {
                result.best_cost = cost;
                result.best.levels = candidate.levels;
            }
        }

        int pos = free_segments - 1;
        while (pos >= 0 && odometer[pos] == n_levels - 1) {
            odometer[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++odometer[pos];
    }

    if (result.candidates == 0) {
        throw SolveError("oracle_search: no budget-exhausting candidate in the level grid");
    }
    return result;
}

} // namespace rumorctl
