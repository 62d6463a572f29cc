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
#ifndef RUMORCTL_CONTROL_HPP
#define RUMORCTL_CONTROL_HPP

#include <functional>
#include <utility>

#include "rumorctl/types.hpp"

namespace rumorctl {

/// Instantaneous campaigning cost c(u). Must be continuous and strictly
/// increasing on [0, u_max] with c(0) = 0. derivative_inverse solves
/// c'(u) = y in closed form; the control law evaluates it at every grid node
/// of every sweep iteration.
struct CostFunction {
    std::function<Real(Real)> evaluate;           // c(u)
    std::function<Real(Real)> derivative_inverse; // u solving c'(u) = y
    std::function<Real(Real)> inverse;            // u solving c(u) = v
};

/// c(u) = u^2: derivative inverse y/2, inverse sqrt(v).
CostFunction quadratic_cost();

/// Budgeted control resources: cost model, per-instant cap and total budget.
struct ControlBudget {
    CostFunction cost;
    Real u_max;
    Real total; // B

    ControlBudget(CostFunction cost_, Real u_max_, Real total_)
        : cost(std::move(cost_)), u_max(u_max_), total(total_)
    {
        if (!(u_max > 0.0)) {
            throw std::invalid_argument("ControlBudget: u_max must be positive");
        }
        if (!(total >= 0.0)) {
            throw std::invalid_argument("ControlBudget: budget must be non-negative");
        }
    }

    /// Largest spend any admissible control can reach over horizon T.
    Real max_spend(Real horizon) const { return cost.evaluate(u_max) * horizon; }
};

/// Control signal sampled on a uniform grid; piecewise linear in between.
struct ControlSignal {
    TimeGrid grid;
    Array values;

    ControlSignal(TimeGrid grid_, Array values_) : grid(grid_), values(std::move(values_))
    {
        if (values.size() != grid.n_nodes()) {
            throw std::invalid_argument("ControlSignal: sample count must match grid nodes");
        }
    }

    static ControlSignal zero(const TimeGrid& grid)
    {
        return ControlSignal(grid, Array::Zero(grid.n_nodes()));
    }

    /// Linear interpolation of the samples at time t (clamped to [0, T]).
    Real at(Real t) const
    {
        const Real x = t / grid.step();
        int k = static_cast<int>(x);
        if (k < 0) {
            k = 0;
        }
        if (k > grid.n_steps - 1) {
            k = grid.n_steps - 1;
        }
        const Real frac = x - k;
        return values[k] + frac * (values[k + 1] - values[k]);
    }
};

/// Guard below which the budget multiplier is treated as degenerate.
inline constexpr Real kMinBudgetMultiplier = 1e-12;

/// Hamiltonian-minimizing control at one point, projected onto [0, u_max]:
///
///   max{0, min{u_max, c'^-1((li*i - ls*i - ls*alpha*(1-i-s)) / lb)}}
///
/// Throws SolveError if the budget multiplier lb is not safely positive.
Real pointwise_optimal_control(Real ignorants, Real spreaders, Real adjoint_ignorants,
                               Real adjoint_spreaders, Real budget_multiplier, Real alpha,
                               const ControlBudget& budget);

/// Total cost of a control signal: interval-wise Simpson quadrature of
/// c(u(t)) on the piecewise-linear interpolant. Exact for quadratic cost,
/// and identical to the spend channel the forward integrator accumulates.
Real budget_spent(const ControlSignal& control, const CostFunction& cost);

} // namespace rumorctl

#endif // RUMORCTL_CONTROL_HPP
