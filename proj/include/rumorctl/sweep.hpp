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
#ifndef RUMORCTL_SWEEP_HPP
#define RUMORCTL_SWEEP_HPP

#include <vector>

#include "rumorctl/integrator.hpp"

namespace rumorctl {

/// Tuning knobs of the forward-backward sweep and the outer bisection on the
/// budget multiplier.
struct SweepConfig {
    Real lambda_low = 0.0;   // initial lower bracket for lambda_b
    Real lambda_high = 100.0;
    Real budget_tol = 1e-4;  // |b(T) - B| termination tolerance
    Real lambda_tol = 1e-4;  // bracket width termination tolerance
    int n_sweeps = 50;       // inner forward-backward iterations
    Real theta = 0.5;        // control relaxation; 1 = direct replacement
    int n_steps = 1000;      // grid resolution

    void validate() const;
    TimeGrid grid(Real horizon) const { return TimeGrid(horizon, n_steps); }
};

/// Output of one inner sweep at a fixed budget multiplier.
struct InnerSweepResult {
    ControlSignal control;
    Real spend;
    Trajectory trajectory;               // state + adjoints under the final control
    std::vector<Real> change_norms;      // sup-norm control change per sweep iteration
    bool converged;                      // final change below 1e-3 * u_max
};

/// Runs the fixed-multiplier forward-backward sweep: starting from u = 0,
/// alternates forward state integration, backward adjoint integration and the
/// pointwise control update u <- theta*u_new + (1-theta)*u for cfg.n_sweeps
/// iterations. Non-convergence is reported via `converged`, not an error.
InnerSweepResult inner_sweep(const EpidemicParams& params, const ControlBudget& budget,
                             Real budget_multiplier, const SweepConfig& cfg);

/// Solver output: optimal control, its trajectory (with adjoints), terminal
/// cost and the converged budget multiplier, plus convergence diagnostics.
struct SolveResult {
    ControlSignal control;
    Trajectory trajectory;
    Real terminal_cost;        // J = i(T)
    Real budget_multiplier;    // lambda_b at termination (0 for the full-budget shortcut)
    Real spend;                // integral of c(u)
    int bisection_iterations;
    std::vector<Real> change_norms; // from the accepted inner sweep
    bool inner_converged;
};

/// Solves the budgeted problem by bisecting the (time-constant) budget
/// multiplier until the spend matches the budget. A budget within budget_tol
/// of c(u_max)*T short-circuits to the full-strength control. Throws
/// SolveError on an invalid bracket or a stalled bisection.
SolveResult solve_optimal(const EpidemicParams& params, const ControlBudget& budget,
                          const SweepConfig& cfg);

/// Cumulative spend b*(t) of a solve, sampled on the solver grid.
const Array& cumulative_spend_curve(const SolveResult& result);

} // namespace rumorctl

#endif // RUMORCTL_SWEEP_HPP
