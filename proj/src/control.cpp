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
#include "rumorctl/control.hpp"

#include <cmath>

namespace rumorctl {

CostFunction quadratic_cost()
{
    CostFunction c;
    c.evaluate = [](Real u) { return u * u; };
    c.derivative_inverse = [](Real y) { return 0.5 * y; };
    c.inverse = [](Real v) {
        if (v < 0.0) {
            throw std::domain_error("quadratic cost: no control has negative cost");
        }
        return std::sqrt(v);
    };
    return c;
}

Real pointwise_optimal_control(Real ignorants, Real spreaders, Real adjoint_ignorants,
                               Real adjoint_spreaders, Real budget_multiplier, Real alpha,
                               const ControlBudget& budget)
{
    if (!(budget_multiplier > kMinBudgetMultiplier)) {
        throw SolveError("degenerate budget multiplier");
    }
    const Real stiflers = 1.0 - ignorants - spreaders;
    const Real switching = adjoint_ignorants * ignorants - adjoint_spreaders * ignorants -
                           adjoint_spreaders * alpha * stiflers;
    const Real unconstrained = budget.cost.derivative_inverse(switching / budget_multiplier);
    if (unconstrained < 0.0) {
        return 0.0;
    }
    if (unconstrained > budget.u_max) {
        return budget.u_max;
    }
    return unconstrained;
}

Real budget_spent(const ControlSignal& control, const CostFunction& cost)
{
    const Array& u = control.values;
    const Real h = control.grid.step();
    Real sum = 0.0;
    for (Eigen::Index k = 0; k + 1 < u.size(); ++k) {
        const Real mid = 0.5 * (u[k] + u[k + 1]);
        sum += cost.evaluate(u[k]) + 4.0 * cost.evaluate(mid) + cost.evaluate(u[k + 1]);
    }
    return h / 6.0 * sum;
}

} // namespace rumorctl
