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
#include "rumorctl/integrator.hpp"

#include <cmath>
#include <string>

namespace rumorctl {

namespace {

// RK4 can overshoot the invariant region by O(h^5); anything beyond this band
// means the step size is too coarse for the dynamics.
constexpr Real kOvershootBand = 1e-6;

Real clamp_fraction(Real value, Real t, const char* channel, int& clipped)
{
    if (value >= 0.0 && value <= 1.0) {
        return value;
    }
    if (value >= -kOvershootBand && value < 0.0) {
        ++clipped;
        return 0.0;
    }
    if (value > 1.0 && value <= 1.0 + kOvershootBand) {
        ++clipped;
        return 1.0;
    }
    throw IntegrationError(std::string(channel) + " left [0, 1] at t = " + std::to_string(t) +
                           " (value " + std::to_string(value) + "); step size too coarse");
}

} // namespace

Trajectory integrate_forward(const EpidemicParams& params, const ControlSignal& control,
                             const CostFunction& cost)
{
    const TimeGrid& grid = control.grid;
    const Real h = grid.step();
    const Array& u = control.values;

    Trajectory traj(grid);
    traj.ignorants[0] = 1.0 - params.s0;
    traj.spreaders[0] = params.s0;
    traj.spend[0] = 0.0;

    auto rhs = [&](Real t, const Vector3& y, Real uv) -> Vector3 {
        const Vector2 d = controlled_rhs(State{y[0], y[1]}, t, uv, params);
        return Vector3(d[0], d[1], cost.evaluate(uv));
    };

    Vector3 y(traj.ignorants[0], traj.spreaders[0], 0.0);
    for (int k = 0; k < grid.n_steps; ++k) {
        const Real t0 = grid.time(k);
        const Real t1 = grid.time(k + 1);
        const Real tm = 0.5 * (t0 + t1);
        const Real u0 = u[k];
        const Real u1 = u[k + 1];
        const Real um = 0.5 * (u0 + u1);

        const Vector3 k1 = rhs(t0, y, u0);
        const Vector3 k2 = rhs(tm, y + (0.5 * h) * k1, um);
        const Vector3 k3 = rhs(tm, y + (0.5 * h) * k2, um);
        const Vector3 k4 = rhs(t1, y + h * k3, u1);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        y[0] = clamp_fraction(y[0], t1, "ignorant fraction", traj.clipped_samples);
        y[1] = clamp_fraction(y[1], t1, "spreader fraction", traj.clipped_samples);
        const Real sum = y[0] + y[1];
        if (sum > 1.0) {
            if (sum > 1.0 + kOvershootBand) {
                throw IntegrationError("ignorants + spreaders exceeded 1 at t = " +
                                       std::to_string(t1) + "; step size too coarse");
            }
            ++traj.clipped_samples;
            y[1] = 1.0 - y[0];
        }

        traj.ignorants[k + 1] = y[0];
        traj.spreaders[k + 1] = y[1];
        traj.spend[k + 1] = y[2];
    }
    return traj;
}

Trajectory integrate_adjoint_backward(const EpidemicParams& params, const ControlSignal& control,
                                      const Trajectory& state, Real terminal_adjoint_ignorants,
                                      Real terminal_adjoint_spreaders)
{
    const TimeGrid& grid = state.grid;
    if (!(control.grid == grid)) {
        throw std::invalid_argument("integrate_adjoint_backward: control and state grids differ");
    }
    const Real h = grid.step();
    const Array& u = control.values;
    const Array& iv = state.ignorants;
    const Array& sv = state.spreaders;

    Trajectory traj = state;
    traj.adjoint_ignorants.resize(grid.n_nodes());
    traj.adjoint_spreaders.resize(grid.n_nodes());
    const int last = grid.n_steps;
    traj.adjoint_ignorants[last] = terminal_adjoint_ignorants;
    traj.adjoint_spreaders[last] = terminal_adjoint_spreaders;

    const Real gamma = params.gamma;
    const Real alpha = params.alpha;
    auto rhs = [&](Real t, const Vector2& lam, Real i, Real s, Real uv) -> Vector2 {
        const Real beta = eval_spreading_rate(params.profile, t);
        Vector2 d;
        d[0] = lam[0] * (beta * s + uv) - lam[1] * (beta * s + gamma * s + uv - alpha * uv);
        d[1] = lam[0] * beta * i - lam[1] * (beta * i + gamma * i - gamma - alpha * uv);
        return d;
    };

    Vector2 lam(terminal_adjoint_ignorants, terminal_adjoint_spreaders);
    for (int k = grid.n_steps - 1; k >= 0; --k) {
        const Real t0 = grid.time(k);
        const Real t1 = grid.time(k + 1);
        const Real tm = 0.5 * (t0 + t1);
        const Real im = 0.5 * (iv[k] + iv[k + 1]);
        const Real sm = 0.5 * (sv[k] + sv[k + 1]);
        const Real um = 0.5 * (u[k] + u[k + 1]);

        const Vector2 k1 = rhs(t1, lam, iv[k + 1], sv[k + 1], u[k + 1]);
        const Vector2 k2 = rhs(tm, lam - (0.5 * h) * k1, im, sm, um);
        const Vector2 k3 = rhs(tm, lam - (0.5 * h) * k2, im, sm, um);
        const Vector2 k4 = rhs(t0, lam - h * k3, iv[k], sv[k], u[k]);
        lam -= (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!std::isfinite(lam[0]) || !std::isfinite(lam[1])) {
            throw IntegrationError("adjoint integration produced non-finite values at t = " +
                                   std::to_string(t0));
        }
        traj.adjoint_ignorants[k] = lam[0];
        traj.adjoint_spreaders[k] = lam[1];
    }
    return traj;
}

} // namespace rumorctl
