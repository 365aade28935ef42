#include "tricoh/numerics/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tricoh/errors.hpp"

namespace tricoh::numerics {

namespace {

class Rk4Stepper {
public:
    Rk4Stepper(const Derivative& f, std::size_t n) : f_(f), k1_(n), k2_(n), k3_(n), k4_(n), tmp_(n) {}

    void step(double t, double h, StateVector& y) {
        const std::size_t n = y.size();
        f_(t, y, k1_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * h * k1_[i];
        f_(t + 0.5 * h, tmp_, k2_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * h * k2_[i];
        f_(t + 0.5 * h, tmp_, k3_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * k3_[i];
        f_(t + h, tmp_, k4_);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += h / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }

    // Advances y across [t0, t1] in `steps` equal substeps.
    bool advance(double t0, double t1, int steps, StateVector& y) {
        const double h = (t1 - t0) / steps;
        for (int s = 0; s < steps; ++s) {
            step(t0 + s * h, h, y);
            if (!std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); }))
                return false;
        }
        return true;
    }

private:
    const Derivative& f_;
    StateVector k1_, k2_, k3_, k4_, tmp_;
};

double max_abs(const StateVector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

Trajectory ode_propagate(const Derivative& derivative, const StateVector& y0,
                         std::span<const double> grid, const OdeOptions& options) {
    if (grid.empty()) throw DomainError("ODE grid is empty");
    if (grid.front() != 0.0) throw DomainError("ODE grid must start at 0");
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) throw DomainError("ODE grid must be strictly increasing");
    }
    if (!(options.max_step > 0.0)) throw DomainError("max_step must be positive");

    Trajectory out;
    out.times.assign(grid.begin(), grid.end());
    out.states.reserve(grid.size());
    out.states.push_back(y0);

    Rk4Stepper stepper(derivative, y0.size());
    StateVector coarse;
    StateVector fine;
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double t0 = grid[k - 1];
        const double t1 = grid[k];
        const StateVector& start = out.states.back();
        int steps = std::max(1, static_cast<int>(std::ceil((t1 - t0) / options.max_step - 1e-9)));

        auto fail = [&]() {
            std::ostringstream msg;
            msg << "non-finite state while integrating from t = " << t0;
            return PropagationError(msg.str(), t0);
        };

        coarse = start;
        if (!stepper.advance(t0, t1, steps, coarse)) throw fail();
        for (int halving = 0;; ++halving) {
            fine = start;
            if (!stepper.advance(t0, t1, 2 * steps, fine)) throw fail();
            double diff = 0.0;
            for (std::size_t i = 0; i < fine.size(); ++i)
                diff = std::max(diff, std::abs(fine[i] - coarse[i]));
            if (diff <= options.rel_tol * std::max(max_abs(fine), 1e-300)) break;
            if (halving >= options.max_halvings) {
                throw PropagationError("step halving did not reach the requested accuracy", t0);
            }
            steps *= 2;
            coarse.swap(fine);
        }
        out.states.push_back(fine);
    }
    return out;
}

}  // namespace tricoh::numerics
