#include "tricoh/numerics/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "tricoh/errors.hpp"

namespace tricoh::numerics {

ChebyshevSeries::ChebyshevSeries(const std::function<double(double)>& f, double lo, double hi,
                                 int nodes)
    : lo_(lo), hi_(hi), coeffs_(static_cast<std::size_t>(nodes), 0.0) {
    if (!(hi > lo)) throw DomainError("Chebyshev interval must have hi > lo");
    if (nodes < 2) throw DomainError("Chebyshev interpolant needs at least two nodes");

    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    std::vector<double> values(static_cast<std::size_t>(nodes));
    for (int k = 0; k < nodes; ++k) {
        const double x = std::cos(std::numbers::pi * (k + 0.5) / nodes);
        values[static_cast<std::size_t>(k)] = f(mid + half * x);
    }
    for (int j = 0; j < nodes; ++j) {
        double sum = 0.0;
        for (int k = 0; k < nodes; ++k)
            sum += values[static_cast<std::size_t>(k)] *
                   std::cos(std::numbers::pi * j * (k + 0.5) / nodes);
        coeffs_[static_cast<std::size_t>(j)] = 2.0 * sum / nodes;
    }
}

double ChebyshevSeries::operator()(double x) const {
    if (x < lo_ || x > hi_) throw DomainError("Chebyshev interpolant evaluated outside its interval");
    const double u = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
    // Clenshaw recurrence
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t j = coeffs_.size() - 1; j >= 1; --j) {
        const double b0 = 2.0 * u * b1 - b2 + coeffs_[j];
        b2 = b1;
        b1 = b0;
    }
    return u * b1 - b2 + 0.5 * coeffs_[0];
}

double ChebyshevSeries::tail_magnitude() const {
    const std::size_t n = coeffs_.size();
    double tail = 0.0;
    for (std::size_t j = n >= 3 ? n - 3 : 0; j < n; ++j) tail += std::abs(coeffs_[j]);
    return tail;
}

}  // namespace tricoh::numerics
