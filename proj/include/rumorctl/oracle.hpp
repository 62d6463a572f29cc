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
#ifndef RUMORCTL_ORACLE_HPP
#define RUMORCTL_ORACLE_HPP

#include "rumorctl/control.hpp"
#include "rumorctl/model.hpp"

namespace rumorctl {

/// Piecewise-constant control on equal-length segments of [0, T].
struct PiecewiseControl {
    int n_segments;
    Array levels; // one level per segment, each in [0, u_max]
};

/// Terminal ignorant fraction under a piecewise-constant control, integrated
/// by RK4 with the exact per-segment level (no interpolation across segment
/// boundaries). n_steps is rounded up to a multiple of n_segments.
Real evaluate_piecewise(const EpidemicParams& params, const PiecewiseControl& control,
                        int n_steps);

struct OracleResult {
    Real best_cost; // smallest terminal ignorant fraction found
    PiecewiseControl best;
    long candidates = 0; // budget-exhausting candidates evaluated
};

/// Brute-force minimizer over budget-exhausting piecewise-constant controls.
/// All but the last segment take levels from a uniform grid of n_levels
/// values in [0, u_max]; the last segment is solved from the residual budget
/// (candidates whose residual cannot be exhausted within the cap are
/// skipped). Ties break toward the lexicographically smallest level vector.
/// Search sizes are capped (n_segments <= 6, n_levels <= 16) to keep the
/// enumeration at desk scale.
OracleResult oracle_search(const EpidemicParams& params, const ControlBudget& budget,
                           int n_segments, int n_levels, int n_steps = 1000);

} // namespace rumorctl

#endif // RUMORCTL_ORACLE_HPP
