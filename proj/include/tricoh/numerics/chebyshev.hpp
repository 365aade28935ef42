#pragma once

#include <functional>
#include <vector>

namespace tricoh::numerics {

/// Chebyshev interpolant of a smooth scalar function on [lo, hi].
class ChebyshevSeries {
public:
    ChebyshevSeries() = default;
    ChebyshevSeries(const std::function<double(double)>& f, double lo, double hi, int nodes);

    double operator()(double x) const;

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    /// Magnitude of the trailing coefficients, a cheap truncation-error indicator.
    double tail_magnitude() const;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
    std::vector<double> coeffs_;
};

}  // namespace tricoh::numerics
