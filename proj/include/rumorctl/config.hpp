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
#ifndef RUMORCTL_CONFIG_HPP
#define RUMORCTL_CONFIG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rumorctl/experiments.hpp"

namespace rumorctl {

/// Requested parameter study, either an explicit value list or an evenly
/// spaced range.
struct SweepRequest {
    SweepParameter parameter = SweepParameter::budget;
    std::vector<Real> values;

    friend bool operator==(const SweepRequest&, const SweepRequest&) = default;
};

/// Scenario description parsed from the flat "key = value" format. Keys
/// follow the model's symbol names (beta, gamma, alpha, s0, T, u_max, B).
/// The budget is given either absolutely (B) or as a fraction of c(u_max)*T
/// (budget_fraction); never both. The cost model is quadratic, c(u) = u^2.
struct ScenarioConfig {
    // spreading-rate profile
    std::string profile = "constant"; // constant | logistic_increasing | logistic_decreasing
    Real beta = 0.8;                  // constant profile rate
    Real beta_m = 0.01;               // logistic floor
    Real beta_M = 2.0;                // logistic ceiling
    Real a1 = 2.0;                    // increasing-profile steepness
    Real c1 = 3.0;                    // increasing-profile midpoint
    Real a2 = 2.0;                    // decreasing-profile steepness
    Real c2 = 2.0;                    // decreasing-profile midpoint

    // model parameters
    Real gamma = 0.1;
    Real alpha = 0.5;
    Real s0 = 0.01;
    Real T = 5.0;

    // resources
    Real u_max = 0.06;
    bool budget_is_absolute = false; // true when B was given instead of budget_fraction
    Real B = 0.0;                    // meaningful when budget_is_absolute
    Real budget_fraction = 0.125;    // of c(u_max) * T

    // solver settings
    int n_steps = 1000;
    Real theta = 1.0;
    Real lambda_low = 0.0;
    Real lambda_high = 100.0;
    Real B_th = 1e-4;
    Real lambda_th = 1e-4;
    int N_sweep = 50;

    // oracle settings
    int n_segments = 5;
    int n_levels = 12;

    // parameter study (sweep subcommand)
    std::optional<SweepRequest> sweep;

    // output path; empty means the subcommand default
    std::string out;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;

    /// Effective budget B, resolving the fractional form.
    Real budget_total() const;

    SpreadingProfile spreading_profile() const;
    EpidemicParams epidemic_params() const;
    ControlBudget control_budget() const;
    SweepConfig sweep_config() const;
    Scenario scenario() const;
};

/// Parses a configuration document, applies --set style overrides on top and
/// validates. Throws std::invalid_argument naming the offending key/line.
ScenarioConfig
parse_config(const std::string& text,
             const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

} // namespace rumorctl

#endif // RUMORCTL_CONFIG_HPP
