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
#ifndef RUMORCTL_MODEL_HPP
#define RUMORCTL_MODEL_HPP

#include "rumorctl/types.hpp"

namespace rumorctl {

/// Spreading-rate profile beta(t). Either constant or one of two logistic
/// shapes modelling rising/falling interest over the campaign horizon:
///
///   increasing:  beta_min + (beta_max - beta_min) / (1 + exp(-a (t - c)))
///   decreasing:  (beta_max - beta_min) * (1 - 1 / (1 + exp(-a (t - c))))
///
/// Values lie in [0, beta_max] for any t. A zero rate is legal (constant 0,
/// or the logistic tails approaching it); the rumor then propagates only
/// through the control terms.
class SpreadingProfile {
public:
    enum class Kind { constant, logistic_increasing, logistic_decreasing };

    static SpreadingProfile constant(Real beta);
    static SpreadingProfile logistic_increasing(Real beta_min, Real beta_max, Real steepness,
                                                Real midpoint);
    static SpreadingProfile logistic_decreasing(Real beta_min, Real beta_max, Real steepness,
                                                Real midpoint);

    Kind kind() const { return kind_; }
    Real beta_min() const { return beta_min_; }
    Real beta_max() const { return beta_max_; }
    Real steepness() const { return steepness_; }
    Real midpoint() const { return midpoint_; }

private:
    SpreadingProfile(Kind kind, Real beta_min, Real beta_max, Real steepness, Real midpoint)
        : kind_(kind), beta_min_(beta_min), beta_max_(beta_max), steepness_(steepness),
          midpoint_(midpoint)
    {
    }

    Kind kind_;
    Real beta_min_;
    Real beta_max_;
    Real steepness_;
    Real midpoint_;
};

Real eval_spreading_rate(const SpreadingProfile& profile, Real t);

/// Model parameters. beta(t) and gamma are aggregate (per-population) rates;
/// alpha scales how strongly the control recruits stiflers relative to
/// ignorants. Immutable after construction.
struct EpidemicParams {
    SpreadingProfile profile;
    Real gamma;   // recovery rate, 1/time
    Real alpha;   // control effectiveness on stiflers
    Real s0;      // initial spreader fraction, in (0, 1)
    Real horizon; // campaign deadline T

    EpidemicParams(SpreadingProfile profile_, Real gamma_, Real alpha_, Real s0_, Real horizon_);
};

/// Population state. Stiflers are always derived, never integrated.
struct State {
    Real ignorants;
    Real spreaders;

    Real stiflers() const { return 1.0 - ignorants - spreaders; }
};

/// Time derivatives (d ignorants/dt, d spreaders/dt) of the controlled system.
Vector2 controlled_rhs(const State& x, Real t, Real u, const EpidemicParams& p);

/// Uncontrolled dynamics; identical to controlled_rhs with u = 0.
Vector2 uncontrolled_rhs(const State& x, Real t, const EpidemicParams& p);

} // namespace rumorctl

#endif // RUMORCTL_MODEL_HPP
