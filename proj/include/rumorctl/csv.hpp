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
#ifndef RUMORCTL_CSV_HPP
#define RUMORCTL_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rumorctl/experiments.hpp"
#include "rumorctl/oracle.hpp"
#include "rumorctl/trajectory.hpp"

namespace rumorctl {

/// Numbers in emitted CSV files carry 12 significant digits.
std::string format_number(Real value);

/// Columns: t,i,s,r,u,b,lambda_i,lambda_s. Requires a trajectory with
/// adjoints and a control on the same grid.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          const ControlSignal& control);

/// Columns: param_value,J_optimal,J_static,J_nocontrol,spend_optimal,bisect_iters.
/// Failed rows serialize their J fields as nan.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Columns: strategy,J,spend.
void write_baseline_csv(std::ostream& out, const std::vector<std::pair<std::string, StrategyOutcome>>& outcomes);

/// Two-column key,value report comparing the sweep solver against the oracle.
void write_oracle_report(std::ostream& out, Real J_sweep, Real J_static,
                         const OracleResult& oracle, int n_levels);

/// One (t, u) sample of an externally supplied control.
struct ControlSample {
    Real t;
    Real u;
};

/// Reads a control from CSV text with a header naming at least "t" and "u"
/// columns (trajectory CSVs produced by this tool qualify).
std::vector<ControlSample> read_control_csv(std::istream& in);

/// Linear resampling of (t, u) samples onto a grid, with constant
/// extrapolation beyond the sampled range. Times must be strictly increasing.
ControlSignal resample_control(const std::vector<ControlSample>& samples, const TimeGrid& grid);

} // namespace rumorctl

#endif // RUMORCTL_CSV_HPP
