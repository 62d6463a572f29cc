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
#ifndef RUMORCTL_EXPERIMENTS_HPP
#define RUMORCTL_EXPERIMENTS_HPP

#include <limits>
#include <string>
#include <vector>

#include "rumorctl/baselines.hpp"
#include "rumorctl/sweep.hpp"

namespace rumorctl {

/// A full problem instance: model, resources and solver settings.
struct Scenario {
    EpidemicParams params;
    ControlBudget budget;
    SweepConfig config;
};

/// Parameters that can be varied one at a time in a study.
enum class SweepParameter { budget, beta, gamma, horizon, s0, u_max, alpha };

const char* to_string(SweepParameter p);
SweepParameter sweep_parameter_from_string(const std::string& name);

/// One-dimensional parameter study: the named parameter takes each value in
/// turn while everything else stays at the base scenario. Values must be
/// strictly increasing. Varying beta requires a constant profile; varying
/// u_max or horizon keeps the budget fixed at the base value.
struct SweepSpec {
    SweepParameter parameter;
    std::vector<Real> values;
    Scenario base;
};

/// Per-value outcome of a parameter study. A failed solve leaves the J fields
/// NaN and stores the failure text in `error`; it does not abort the study.
struct SweepRow {
    Real value;
    Real J_optimal = std::numeric_limits<Real>::quiet_NaN();
    Real J_static = std::numeric_limits<Real>::quiet_NaN();
    Real J_nocontrol = std::numeric_limits<Real>::quiet_NaN();
    Real spend_optimal = std::numeric_limits<Real>::quiet_NaN();
    int bisect_iters = 0;
    std::string error;

    bool ok() const { return error.empty(); }
};

std::vector<SweepRow> run_parameter_sweep(const SweepSpec& spec);

/// Derives the scenario for one sweep value (exposed for tests).
Scenario derive_scenario(const SweepSpec& spec, Real value);

/// Optimal control shape, cumulative spend and the J triple for one scenario.
struct ShapeStudy {
    ControlSignal control;
    Array spend_curve;
    Real J_optimal;
    Real J_static;
    Real J_nocontrol;
};

ShapeStudy run_shape_study(const EpidemicParams& params, const ControlBudget& budget,
                           const SweepConfig& cfg);

} // namespace rumorctl

#endif // RUMORCTL_EXPERIMENTS_HPP
