#include "tricoh/bath.hpp"

#include <cmath>
#include <string>

#include "tricoh/errors.hpp"

namespace tricoh {

namespace {

// coth(w / 2kbt) * w, finite as w -> 0.
double w_coth(double omega, double kbt) {
    if (omega < 1e-12 * kbt) {
        const double x = omega / (2.0 * kbt);
        return 2.0 * kbt * (1.0 + x * x / 3.0);
    }
    return omega / std::tanh(omega / (2.0 * kbt));
}

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
}

}  // namespace

std::string_view to_string(Topology topology) {
    return topology == Topology::local ? "local" : "common";
}

std::string_view to_string(Memory memory) {
    return memory == Memory::markov ? "markov" : "non-markov";
}

Topology parse_topology(std::string_view name) {
    if (name == "local") return Topology::local;
    if (name == "common") return Topology::common;
    throw DomainError("unknown topology '" + std::string(name) + "'");
}

Memory parse_memory(std::string_view name) {
    if (name == "markov") return Memory::markov;
    if (name == "non-markov" || name == "non_markov" || name == "nonmarkov") return Memory::non_markov;
    throw DomainError("unknown memory mode '" + std::string(name) + "'");
}

void BathSpec::validate() const {
    if (!(eta >= 0.0) || !std::isfinite(eta)) throw DomainError("eta must be >= 0");
    if (!(lambda_cutoff > 0.0) || !std::isfinite(lambda_cutoff))
        throw DomainError("lambda cutoff must be > 0");
    if (!(kbt > 0.0) || !std::isfinite(kbt)) throw DomainError("kbt must be > 0");
}

double spectral_density(const BathSpec& bath, double omega) {
    if (!(omega >= 0.0)) throw DomainError("spectral density needs omega >= 0");
    return bath.eta * omega * std::exp(-omega / bath.lambda_cutoff);
}

double markov_rate(const BathSpec& bath) {
    bath.validate();
    return 4.0 * std::numbers::pi * bath.eta * bath.kbt;
}

numerics::QuadratureSpec kernel_quadrature(const BathSpec& bath, double t) {
    numerics::QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    spec.abs_tol = 1e-20;
    spec.cutoff_hint = bath.lambda_cutoff;
    spec.oscillation_hint = t;
    spec.max_subdivisions = 5000;
    return spec;
}

double dephasing_rate(const BathSpec& bath, double t) {
    bath.validate();
    require_time(t);
    if (t == 0.0 || bath.eta == 0.0) return 0.0;
    const double eta = bath.eta;
    const double cutoff = bath.lambda_cutoff;
    const double kbt = bath.kbt;
    // 2 J(w) coth(w/2kT) sin(wt)/w = 2 eta e^{-w/L} [w coth] sin(wt)/w
    auto integrand = [=](double w) {
        if (w == 0.0) return 4.0 * eta * kbt * t;
        return 2.0 * eta * std::exp(-w / cutoff) * w_coth(w, kbt) * std::sin(w * t) / w;
    };
    return numerics::integrate_semi_infinite(integrand, kernel_quadrature(bath, t)).value;
}

double cumulative_decoherence(const BathSpec& bath, double t) {
    bath.validate();
    require_time(t);
    if (bath.memory == Memory::markov) return markov_rate(bath) * t;
    if (t == 0.0 || bath.eta == 0.0) return 0.0;
    const double eta = bath.eta;
    const double cutoff = bath.lambda_cutoff;
    const double kbt = bath.kbt;
    // 2 J(w) coth(w/2kT) (1 - cos wt)/w^2, with 1 - cos = 2 sin^2(wt/2)
    auto integrand = [=](double w) {
        if (w == 0.0) return 2.0 * eta * kbt * t * t;
        const double s = std::sin(0.5 * w * t);
        return 2.0 * eta * std::exp(-w / cutoff) * w_coth(w, kbt) * 2.0 * s * s / (w * w);
    };
    return numerics::integrate_semi_infinite(integrand, kernel_quadrature(bath, t)).value;
}

LambKernel lamb_kernel(const BathSpec& bath, double t) {
    bath.validate();
    require_time(t);
    if (bath.memory == Memory::markov) return {0.0, 0.0};
    const double eta = bath.eta;
    const double cutoff = bath.lambda_cutoff;
    const double x = cutoff * t;
    const double mu = eta * cutoff * x * x / (1.0 + x * x);
    // M = eta (L t - atan(L t)); use the series for small L t to avoid cancellation
    double big_m = 0.0;
    if (x < 1e-3) {
        const double x2 = x * x;
        big_m = eta * x * x2 * (1.0 / 3.0 - x2 / 5.0 + x2 * x2 / 7.0);
    } else {
        big_m = eta * (x - std::atan(x));
    }
    return {mu, big_m};
}

DecoherenceKernels::DecoherenceKernels(BathSpec bath) : bath_(bath) { bath_.validate(); }

double DecoherenceKernels::gamma(double t) const {
    require_time(t);
    if (bath_.memory == Memory::markov) return markov_rate(bath_);
    return dephasing_rate(bath_, t);
}

double DecoherenceKernels::big_gamma(double t) const { return cumulative_decoherence(bath_, t); }

double DecoherenceKernels::mu(double t) const { return lamb_kernel(bath_, t).mu; }

double DecoherenceKernels::big_m(double t) const { return lamb_kernel(bath_, t).big_m; }

numerics::ChebyshevSeries DecoherenceKernels::gamma_table(double t_max) const {
    if (!(t_max > 0.0)) throw DomainError("gamma table needs t_max > 0");
    auto f = [this](double t) { return gamma(std::max(t, 0.0)); };
    if (bath_.memory == Memory::markov) return numerics::ChebyshevSeries(f, 0.0, t_max, 2);

    const double scale = 4.0 * bath_.eta * bath_.kbt * std::atan(bath_.lambda_cutoff * t_max) + 1e-300;
    numerics::ChebyshevSeries table;
    for (int nodes = 32; nodes <= 512; nodes *= 2) {
        table = numerics::ChebyshevSeries(f, 0.0, t_max, nodes);
        if (table.tail_magnitude() < 1e-13 * scale) return table;
    }
    return table;
}

}  // namespace tricoh
