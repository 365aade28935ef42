#pragma once

#include <functional>

namespace tricoh::numerics {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    /// Frequency scale beyond which the integrand decays at least exponentially.
    double cutoff_hint = 1.0;
    /// Largest angular frequency of an oscillatory factor, 0 if none.
    /// Initial panels are kept narrower than a quarter period.
    double oscillation_hint = 0.0;
    int max_subdivisions = 2000;

    void validate() const;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int evaluations;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [0, a) for a finite a.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureSpec& spec);

/// Integral of f over [0, inf). The body [0, K*cutoff] is integrated adaptively,
/// then geometrically growing tail panels are added until they fall below abs_tol/10.
/// Throws ConvergenceError (with the best estimate) or DomainError on NaN from f.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec);

}  // namespace tricoh::numerics
