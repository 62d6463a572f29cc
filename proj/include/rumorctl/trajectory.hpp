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
#ifndef RUMORCTL_TRAJECTORY_HPP
#define RUMORCTL_TRAJECTORY_HPP

#include "rumorctl/types.hpp"

namespace rumorctl {

/// State samples on a time grid: population fractions, cumulative spend and
/// (after a backward pass) the adjoint channels. Produced once, then
/// read-only.
struct Trajectory {
    TimeGrid grid;
    Array ignorants;         // i
    Array spreaders;         // s
    Array spend;             // b, cumulative cost
    Array adjoint_ignorants; // lambda_i; empty until the backward pass
    Array adjoint_spreaders; // lambda_s

    int clipped_samples = 0; // state samples clamped back into [0, 1]

    explicit Trajectory(const TimeGrid& grid_)
        : grid(grid_), ignorants(grid_.n_nodes()), spreaders(grid_.n_nodes()),
          spend(grid_.n_nodes())
    {
    }

    bool has_adjoints() const { return adjoint_ignorants.size() == ignorants.size(); }

    Array stiflers() const { return 1.0 - ignorants - spreaders; }

    /// Terminal ignorant fraction, the campaign cost J.
    Real terminal_ignorants() const { return ignorants[ignorants.size() - 1]; }

    /// Total spend b(T).
    Real total_spend() const { return spend[spend.size() - 1]; }
};

} // namespace rumorctl

#endif // RUMORCTL_TRAJECTORY_HPP
