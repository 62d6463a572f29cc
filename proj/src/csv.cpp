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
#include "rumorctl/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace rumorctl {

std::string format_number(Real value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          const ControlSignal& control)
{
    if (!trajectory.has_adjoints()) {
        throw std::invalid_argument("write_trajectory_csv: trajectory lacks adjoint channels");
    }
    if (!(control.grid == trajectory.grid)) {
        throw std::invalid_argument("write_trajectory_csv: control and trajectory grids differ");
    }
    out << "t,i,s,r,u,b,lambda_i,lambda_s\n";
    for (int k = 0; k < trajectory.grid.n_nodes(); ++k) {
        const Real i = trajectory.ignorants[k];
        const Real s = trajectory.spreaders[k];
        out << format_number(trajectory.grid.time(k)) << ',' << format_number(i) << ','
            << format_number(s) << ',' << format_number(1.0 - i - s) << ','
            << format_number(control.values[k]) << ',' << format_number(trajectory.spend[k]) << ','
            << format_number(trajectory.adjoint_ignorants[k]) << ','
            << format_number(trajectory.adjoint_spreaders[k]) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << "param_value,J_optimal,J_static,J_nocontrol,spend_optimal,bisect_iters\n";
    for (const SweepRow& row : rows) {
        out << format_number(row.value) << ',' << format_number(row.J_optimal) << ','
            << format_number(row.J_static) << ',' << format_number(row.J_nocontrol) << ','
            << format_number(row.spend_optimal) << ',' << row.bisect_iters << '\n';
    }
}

void write_baseline_csv(std::ostream& out,
                        const std::vector<std::pair<std::string, StrategyOutcome>>& outcomes)
{
    out << "strategy,J,spend\n";
    for (const auto& [name, outcome] : outcomes) {
        out << name << ',' << format_number(outcome.terminal_cost) << ','
            << format_number(outcome.spend) << '\n';
    }
}

void write_oracle_report(std::ostream& out, Real J_sweep, Real J_static,
                         const OracleResult& oracle, int n_levels)
{
    out << "key,value\n";
    out << "J_sweep," << format_number(J_sweep) << '\n';
    out << "J_oracle," << format_number(oracle.best_cost) << '\n';
    out << "J_static," << format_number(J_static) << '\n';
    out << "sweep_minus_oracle," << format_number(J_sweep - oracle.best_cost) << '\n';
    out << "n_segments," << oracle.best.n_segments << '\n';
    out << "n_levels," << n_levels << '\n';
    out << "candidates," << oracle.candidates << '\n';
    for (int j = 0; j < oracle.best.n_segments; ++j) {
        out << "level_" << j << ',' << format_number(oracle.best.levels[j]) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

} // namespace

std::vector<ControlSample> read_control_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("control CSV: empty input");
    }
    const std::vector<std::string> header = split_csv_line(line);
    int t_col = -1;
    int u_col = -1;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] == "t") {
            t_col = static_cast<int>(j);
        }
        else if (header[j] == "u") {
            u_col = static_cast<int>(j);
        }
    }
    if (t_col < 0 || u_col < 0) {
        throw std::invalid_argument("control CSV: header must name 't' and 'u' columns");
    }

    std::vector<ControlSample> samples;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) <= std::max(t_col, u_col)) {
            throw std::invalid_argument("control CSV: too few columns on line " +
                                        std::to_string(line_no));
        }
        try {
            samples.push_back(
                ControlSample{std::stod(fields[t_col]), std::stod(fields[u_col])});
        }
        catch (const std::exception&) {
            throw std::invalid_argument("control CSV: bad number on line " +
                                        std::to_string(line_no));
        }
    }
    if (samples.size() < 2) {
        throw std::invalid_argument("control CSV: need at least two samples");
    }
    for (std::size_t j = 1; j < samples.size(); ++j) {
        if (!(samples[j].t > samples[j - 1].t)) {
            throw std::invalid_argument("control CSV: times must be strictly increasing");
        }
    }
    return samples;
}

ControlSignal resample_control(const std::vector<ControlSample>& samples, const TimeGrid& grid)
{
    Array u(grid.n_nodes());
    std::size_t seg = 0;
    for (int k = 0; k < grid.n_nodes(); ++k) {
        const Real t = grid.time(k);
        if (t <= samples.front().t) {
            u[k] = samples.front().u;
            continue;
        }
        if (t >= samples.back().t) {
            u[k] = samples.back().u;
            continue;
        }
        while (samples[seg + 1].t < t) {
            ++seg;
        }
        const ControlSample& a = samples[seg];
        const ControlSample& b = samples[seg + 1];
        u[k] = a.u + (t - a.t) / (b.t - a.t) * (b.u - a.u);
    }
    return ControlSignal(grid, std::move(u));
}

} // namespace rumorctl
