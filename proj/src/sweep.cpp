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
#include "rumorctl/sweep.hpp"

#include <cmath>
#include <utility>

namespace rumorctl {

namespace {

constexpr int kMaxBisectionIterations = 200;

Array pointwise_control_on_grid(const Trajectory& traj, Real budget_multiplier, Real alpha,
                                const ControlBudget& budget)
{
    Array u(traj.grid.n_nodes());
    for (Eigen::Index k = 0; k < u.size(); ++k) {
        u[k] = pointwise_optimal_control(traj.ignorants[k], traj.spreaders[k],
                                         traj.adjoint_ignorants[k], traj.adjoint_spreaders[k],
                                         budget_multiplier, alpha, budget);
    }
    return u;
}

} // namespace

void SweepConfig::validate() const
{
    if (!(lambda_low >= 0.0 && lambda_high > lambda_low)) {
        throw std::invalid_argument("SweepConfig: requires 0 <= lambda_low < lambda_high");
    }
    if (!(budget_tol > 0.0) || !(lambda_tol > 0.0)) {
        throw std::invalid_argument("SweepConfig: tolerances must be positive");
    }
    if (n_sweeps < 1) {
        throw std::invalid_argument("SweepConfig: n_sweeps must be at least 1");
    }
    if (!(theta > 0.0 && theta <= 1.0)) {
        throw std::invalid_argument("SweepConfig: theta must lie in (0, 1]");
    }
    if (n_steps < 1) {
        throw std::invalid_argument("SweepConfig: n_steps must be at least 1");
    }
}

InnerSweepResult inner_sweep(const EpidemicParams& params, const ControlBudget& budget,
                             Real budget_multiplier, const SweepConfig& cfg)
{
    cfg.validate();
    const TimeGrid grid = cfg.grid(params.horizon);

    ControlSignal control = ControlSignal::zero(grid);
    std::vector<Real> change_norms;
    change_norms.reserve(cfg.n_sweeps);

    for (int sweep = 0; sweep < cfg.n_sweeps; ++sweep) {
        const Trajectory state = integrate_forward(params, control, budget.cost);
        const Trajectory with_adjoints = integrate_adjoint_backward(params, control, state);
        const Array updated =
            pointwise_control_on_grid(with_adjoints, budget_multiplier, params.alpha, budget);
        const Array next = cfg.theta * updated + (1.0 - cfg.theta) * control.values;
        change_norms.push_back((next - control.values).abs().maxCoeff());
        control.values = next;
    }

    // Recompute the trajectory under the final control so that the returned
    // state and adjoints belong to the control we hand back.
    Trajectory state = integrate_forward(params, control, budget.cost);
    Trajectory final_traj = integrate_adjoint_backward(params, control, state);

    InnerSweepResult result{std::move(control), 0.0, std::move(final_traj),
                            std::move(change_norms), true};
    result.spend = budget_spent(result.control, budget.cost);
    result.converged = result.change_norms.back() <= 1e-3 * budget.u_max;
    return result;
}

SolveResult solve_optimal(const EpidemicParams& params, const ControlBudget& budget,
                          const SweepConfig& cfg)
{
    cfg.validate();
    const Real max_spend = budget.max_spend(params.horizon);
    if (!(budget.total > 0.0)) {
        throw std::invalid_argument("solve_optimal: budget must be positive");
    }
    if (budget.total > max_spend + cfg.budget_tol) {
        throw std::invalid_argument("solve_optimal: budget exceeds c(u_max) * T; every "
                                    "admissible control is affordable");
    }

    const TimeGrid grid = cfg.grid(params.horizon);

    // With the full budget there is nothing to allocate: apply full strength
    // throughout and skip the bisection.
    if (std::abs(budget.total - max_spend) <= cfg.budget_tol) {
        ControlSignal control(grid, Array::Constant(grid.n_nodes(), budget.u_max));
        Trajectory state = integrate_forward(params, control, budget.cost);
        Trajectory traj = integrate_adjoint_backward(params, control, state);
        const Real spend = budget_spent(control, budget.cost);
        const Real terminal = traj.terminal_ignorants();
        return SolveResult{std::move(control), std::move(traj), terminal, 0.0,
                           spend,              0,               {},       true};
    }

    Real low = cfg.lambda_low;
    Real high = cfg.lambda_high;
    int iterations = 0;
    while (iterations < kMaxBisectionIterations) {
        ++iterations;
        const Real mid = 0.5 * (low + high);
        InnerSweepResult inner = inner_sweep(params, budget, mid, cfg);
        if (inner.spend > budget.total) {
            low = mid;
        }
        else if (inner.spend < budget.total) {
            high = mid;
        }
        if (std::abs(inner.spend - budget.total) < cfg.budget_tol &&
            (high - low) < cfg.lambda_tol) {
            const Real terminal = inner.trajectory.terminal_ignorants();
            return SolveResult{std::move(inner.control),
                               std::move(inner.trajectory),
                               terminal,
                               mid,
                               inner.spend,
                               iterations,
                               std::move(inner.change_norms),
                               inner.converged};
        }
    }

    // The bracket pinched without meeting the budget: the root lies outside
    // [lambda_low, lambda_high], i.e. both endpoints sit on the same side.
    if (high - low < cfg.lambda_tol) {
        throw SolveError("bisection bracket invalid");
    }
    throw SolveError("bisection stalled");
}

const Array& cumulative_spend_curve(const SolveResult& result)
{
    return result.trajectory.spend;
}

} // namespace rumorctl
