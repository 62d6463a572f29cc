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
#include "rumorctl/model.hpp"

#include <cmath>

namespace rumorctl {

SpreadingProfile SpreadingProfile::constant(Real beta)
{
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("SpreadingProfile: constant rate must be non-negative");
    }
    return SpreadingProfile(Kind::constant, beta, beta, 0.0, 0.0);
}

namespace {

void check_logistic(Real beta_min, Real beta_max, Real steepness)
{
    if (!(beta_min >= 0.0)) {
        throw std::invalid_argument("SpreadingProfile: beta_min must be non-negative");
    }
    if (!(beta_max > beta_min)) {
        throw std::invalid_argument("SpreadingProfile: beta_max must exceed beta_min");
    }
    if (!(steepness > 0.0)) {
        throw std::invalid_argument("SpreadingProfile: steepness must be positive");
    }
}

} // namespace

SpreadingProfile SpreadingProfile::logistic_increasing(Real beta_min, Real beta_max,
                                                       Real steepness, Real midpoint)
{
    check_logistic(beta_min, beta_max, steepness);
    return SpreadingProfile(Kind::logistic_increasing, beta_min, beta_max, steepness, midpoint);
}

SpreadingProfile SpreadingProfile::logistic_decreasing(Real beta_min, Real beta_max,
                                                       Real steepness, Real midpoint)
{
    check_logistic(beta_min, beta_max, steepness);
    return SpreadingProfile(Kind::logistic_decreasing, beta_min, beta_max, steepness, midpoint);
}

Real eval_spreading_rate(const SpreadingProfile& profile, Real t)
{
    switch (profile.kind()) {
    case SpreadingProfile::Kind::constant:
        return profile.beta_max();
    case SpreadingProfile::Kind::logistic_increasing:
        return profile.beta_min() +
               (profile.beta_max() - profile.beta_min()) /
                   (1.0 + std::exp(-profile.steepness() * (t - profile.midpoint())));
    case SpreadingProfile::Kind::logistic_decreasing:
        return (profile.beta_max() - profile.beta_min()) *
               (1.0 - 1.0 / (1.0 + std::exp(-profile.steepness() * (t - profile.midpoint()))));
    }
    return 0.0; // unreachable
}

EpidemicParams::EpidemicParams(SpreadingProfile profile_, Real gamma_, Real alpha_, Real s0_,
                               Real horizon_)
    : profile(profile_), gamma(gamma_), alpha(alpha_), s0(s0_), horizon(horizon_)
{
    if (!(gamma >= 0.0)) {
        throw std::invalid_argument("EpidemicParams: gamma must be non-negative");
    }
    if (!(alpha >= 0.0)) {
        throw std::invalid_argument("EpidemicParams: alpha must be non-negative");
    }
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("EpidemicParams: horizon must be positive");
    }
    // s0 = 0 (no seed) and s0 = 1 (no ignorants) are degenerate and rejected.
    if (!(s0 > 0.0 && s0 < 1.0)) {
        throw std::invalid_argument("EpidemicParams: s0 must lie strictly between 0 and 1");
    }
}

Vector2 controlled_rhs(const State& x, Real t, Real u, const EpidemicParams& p)
{
    const Real beta = eval_spreading_rate(p.profile, t);
    const Real i = x.ignorants;
    const Real s = x.spreaders;
    const Real contact = beta * i * s;
    const Real recruit = u * i;
    Vector2 d;
    d[0] = -contact - recruit;
    d[1] = contact + p.gamma * i * s - p.gamma * s + recruit + p.alpha * u * (1.0 - i - s);
    return d;
}

Vector2 uncontrolled_rhs(const State& x, Real t, const EpidemicParams& p)
{
    return controlled_rhs(x, t, 0.0, p);
}

} // namespace rumorctl
