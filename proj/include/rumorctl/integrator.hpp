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
#ifndef RUMORCTL_INTEGRATOR_HPP
#define RUMORCTL_INTEGRATOR_HPP

#include "rumorctl/control.hpp"
#include "rumorctl/model.hpp"
#include "rumorctl/trajectory.hpp"

namespace rumorctl {

/// Fixed-step RK4 over the control's grid, starting from
/// i(0) = 1 - s0, s(0) = s0, b(0) = 0. Control values between nodes are
/// obtained by linear interpolation. Samples overshooting [0, 1] by at most
/// 1e-6 are clamped (and counted); larger excursions raise IntegrationError.
Trajectory integrate_forward(const EpidemicParams& params, const ControlSignal& control,
                             const CostFunction& cost);

/// Backward RK4 for the adjoint pair from t = T down to 0, with state and
/// control linearly interpolated at the half steps. Returns a copy of `state`
/// with the adjoint channels filled. The default terminal data (1, 0) is the
/// transversality condition for the terminal cost i(T).
Trajectory integrate_adjoint_backward(const EpidemicParams& params, const ControlSignal& control,
                                      const Trajectory& state,
                                      Real terminal_adjoint_ignorants = 1.0,
                                      Real terminal_adjoint_spreaders = 0.0);

} // namespace rumorctl

#endif // RUMORCTL_INTEGRATOR_HPP
