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
#ifndef RUMORCTL_TYPES_HPP
#define RUMORCTL_TYPES_HPP

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace rumorctl {

using Real = double;
using Array = Eigen::Array<Real, Eigen::Dynamic, 1>;
using Vector2 = Eigen::Matrix<Real, 2, 1>;
using Vector3 = Eigen::Matrix<Real, 3, 1>;

/// Thrown when a numerical routine fails (divergence, stalled bisection, ...).
struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an integration leaves the admissible state region or produces
/// non-finite values.
struct IntegrationError : SolveError {
    using SolveError::SolveError;
};

/// Uniform time grid on [0, horizon] with n_steps + 1 nodes.
struct TimeGrid {
    Real horizon{1.0};
    int n_steps{1};

    TimeGrid(Real horizon_, int n_steps_) : horizon(horizon_), n_steps(n_steps_)
    {
        if (!(horizon > 0.0)) {
            throw std::invalid_argument("TimeGrid: horizon must be positive");
        }
        if (n_steps < 1) {
            throw std::invalid_argument("TimeGrid: n_steps must be at least 1");
        }
    }

    Real step() const { return horizon / n_steps; }
    int n_nodes() const { return n_steps + 1; }

    /// Node time t_k; exact at both endpoints.
    Real time(int k) const { return horizon * (static_cast<Real>(k) / n_steps); }

    Array times() const { return Array::LinSpaced(n_steps + 1, 0.0, horizon); }

    friend bool operator==(const TimeGrid& a, const TimeGrid& b)
    {
        return a.horizon == b.horizon && a.n_steps == b.n_steps;
    }
};

} // namespace rumorctl

#endif // RUMORCTL_TYPES_HPP
