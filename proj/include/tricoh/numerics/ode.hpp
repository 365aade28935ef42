#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace tricoh::numerics {

using StateVector = std::vector<double>;

/// dy/dt written into the output span; must not resize anything.
using Derivative = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

struct OdeOptions {
    /// Upper bound on the internal RK4 step.
    double max_step = std::numeric_limits<double>::infinity();
    /// Per-interval acceptance: halving the step may move the endpoint by at most this (relative).
    double rel_tol = 1e-8;
    int max_halvings = 16;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states;
};

/// Classical fourth-order Runge-Kutta with step doubling per output interval.
/// grid must start at 0 and increase strictly; states[k] is the solution at grid[k].
/// Throws PropagationError on a non-finite derivative or state.
Trajectory ode_propagate(const Derivative& derivative, const StateVector& y0,
                         std::span<const double> grid, const OdeOptions& options = {});

}  // namespace tricoh::numerics
