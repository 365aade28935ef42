#include "tricoh/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "tricoh/errors.hpp"

namespace tricoh::numerics {

namespace {

// 15-point Kronrod nodes on [-1,1] (non-negative half) with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1,3,5) and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

double checked_eval(const std::function<double(double)>& f, double x) {
    const double y = f(x);
    if (std::isnan(y)) {
        throw DomainError("integrand returned NaN at x = " + std::to_string(x));
    }
    return y;
}

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = checked_eval(f, centre);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double sum = checked_eval(f, centre - dx) + checked_eval(f, centre + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be strictly positive");
    }
    if (!(cutoff_hint > 0.0)) throw DomainError("quadrature cutoff hint must be strictly positive");
    if (oscillation_hint < 0.0) throw DomainError("oscillation hint must be non-negative");
    if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureSpec& spec) {
    spec.validate();
    if (!(hi > lo)) return {0.0, 0.0, 0};

    double width = std::min(spec.cutoff_hint, hi - lo);
    if (spec.oscillation_hint > 0.0) {
        width = std::min(width, std::numbers::pi / (4.0 * spec.oscillation_hint));
    }
    const int initial = static_cast<int>(std::ceil((hi - lo) / width - 1e-12));

    std::priority_queue<Panel> panels;
    double total = 0.0;
    double error = 0.0;
    int evaluations = 0;
    for (int i = 0; i < initial; ++i) {
        const double a = lo + (hi - lo) * i / initial;
        const double b = (i + 1 == initial) ? hi : lo + (hi - lo) * (i + 1) / initial;
        Panel p = gauss_kronrod(f, a, b);
        evaluations += 15;
        total += p.value;
        error += p.error;
        panels.push(p);
    }

    int subdivisions = initial;
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (subdivisions >= spec.max_subdivisions) {
            throw ConvergenceError("adaptive quadrature did not converge", total, error);
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Panel left = gauss_kronrod(f, worst.lo, mid);
        const Panel right = gauss_kronrod(f, mid, worst.hi);
        evaluations += 30;
        ++subdivisions;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed accumulated cancellation from the running updates.
    total = 0.0;
    error = 0.0;
    std::vector<Panel> remaining;
    remaining.reserve(panels.size());
    while (!panels.empty()) {
        remaining.push_back(panels.top());
        panels.pop();
    }
    std::sort(remaining.begin(), remaining.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    for (const Panel& p : remaining) {
        total += p.value;
        error += p.error;
    }
    return {total, error, evaluations};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec) {
    spec.validate();
    constexpr double kBodyScale = 40.0;
    constexpr int kMaxTailPanels = 60;

    double hi = kBodyScale * spec.cutoff_hint;
    QuadratureResult result = integrate_interval(f, 0.0, hi, spec);

    QuadratureSpec tail_spec = spec;
    tail_spec.oscillation_hint = 0.0;
    for (int k = 0; k < kMaxTailPanels; ++k) {
        const double next = 2.0 * hi;
        tail_spec.cutoff_hint = next - hi;
        tail_spec.abs_tol = spec.abs_tol / 10.0;
        const QuadratureResult tail = integrate_interval(f, hi, next, tail_spec);
        result.value += tail.value;
        result.error_estimate += tail.error_estimate;
        result.evaluations += tail.evaluations;
        hi = next;
        if (std::abs(tail.value) < spec.abs_tol / 10.0) return result;
    }
    throw ConvergenceError("integrand tail did not decay", result.value, result.error_estimate);
}

}  // namespace tricoh::numerics
