#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "tricoh/bath.hpp"
#include "tricoh/errors.hpp"
#include "tricoh/numerics/quadrature.hpp"

using namespace tricoh;

namespace {

BathSpec paper_bath(Memory memory = Memory::non_markov) {
    BathSpec b;
    b.memory = memory;
    return b;
}

// Direct quadrature of mu(t) = \int eta e^{-w/L} (1 - cos wt) dw.
double mu_by_quadrature(const BathSpec& b, double t) {
    numerics::QuadratureSpec spec;
    spec.cutoff_hint = b.lambda_cutoff;
    spec.oscillation_hint = t;
    spec.abs_tol = 1e-22;
    spec.rel_tol = 1e-12;
    return numerics::integrate_semi_infinite(
               [&](double w) {
                   const double s = std::sin(0.5 * w * t);
                   return b.eta * std::exp(-w / b.lambda_cutoff) * 2.0 * s * s;
               },
               spec)
        .value;
}

}  // namespace

TEST_CASE("paper defaults") {
    const BathSpec b;
    CHECK(b.eta == 0.1);
    CHECK(b.lambda_cutoff == 0.01);
    CHECK(b.kbt == doctest::Approx(0.0795775).epsilon(1e-6));
}

TEST_CASE("spectral density") {
    const BathSpec b = paper_bath();
    CHECK(spectral_density(b, 0.0) == 0.0);
    CHECK(spectral_density(b, b.lambda_cutoff) == doctest::Approx(3.6788e-4).epsilon(1e-4));
    // maximum at w = Lambda
    CHECK(spectral_density(b, 0.99 * b.lambda_cutoff) < spectral_density(b, b.lambda_cutoff));
    CHECK(spectral_density(b, 1.01 * b.lambda_cutoff) < spectral_density(b, b.lambda_cutoff));
    BathSpec zero = b;
    zero.eta = 0.0;
    for (double w : {0.0, 0.01, 1.0}) CHECK(spectral_density(zero, w) == 0.0);
    CHECK_THROWS_AS(spectral_density(b, -1.0), DomainError);
}

TEST_CASE("Markov rate") {
    BathSpec b = paper_bath();
    CHECK(markov_rate(b) == doctest::Approx(0.1).epsilon(1e-15));
    b.kbt *= 2.0;
    CHECK(markov_rate(b) == doctest::Approx(0.2).epsilon(1e-15));
    b.eta = 0.0;
    CHECK(markov_rate(b) == 0.0);
}

TEST_CASE("invalid bath specs") {
    BathSpec b;
    b.lambda_cutoff = 0.0;
    CHECK_THROWS_AS(b.validate(), DomainError);
    b = {};
    b.kbt = -1.0;
    CHECK_THROWS_AS(b.validate(), DomainError);
    b = {};
    b.eta = -0.1;
    CHECK_THROWS_AS(b.validate(), DomainError);
}

TEST_CASE("dephasing rate") {
    const BathSpec b = paper_bath();
    CHECK(dephasing_rate(b, 0.0) == 0.0);
    CHECK(dephasing_rate(b, 100.0) == doctest::Approx(0.025).epsilon(0.03));
    for (double t = 0.0; t <= 300.0; t += 7.5) CHECK(dephasing_rate(b, t) >= 0.0);
    CHECK_THROWS_AS(dephasing_rate(b, -1.0), DomainError);
}

TEST_CASE("dephasing rate matches the high-temperature closed form") {
    const BathSpec b = paper_bath();
    const double gamma0 = markov_rate(b);
    for (int k = 1; k <= 30; ++k) {
        const double t = 0.1 * k / gamma0;
        const double closed = oracle::gamma_high_temperature(b.eta, b.lambda_cutoff, b.kbt, t);
        CHECK(std::abs(dephasing_rate(b, t) - closed) / gamma0 <= 0.05);
        CHECK(std::abs(dephasing_rate(b, t) - closed) / closed <= 0.05);
    }
}

TEST_CASE("cumulative decoherence") {
    const BathSpec markov = paper_bath(Memory::markov);
    CHECK(cumulative_decoherence(markov, 0.0) == 0.0);
    CHECK(cumulative_decoherence(markov, 5.0) == doctest::Approx(0.5).epsilon(1e-15));
    // exactly linear with slope gamma_0
    for (double t : {0.3, 1.0, 17.0}) CHECK(cumulative_decoherence(markov, t) == markov_rate(markov) * t);

    const BathSpec nm = paper_bath();
    CHECK(cumulative_decoherence(nm, 0.0) == 0.0);
    CHECK(cumulative_decoherence(nm, 2.0) == doctest::Approx(6.37e-4).epsilon(0.03));
    for (int k = 1; k <= 30; ++k) {
        const double t = k;
        const double closed = oracle::big_gamma_high_temperature(nm.eta, nm.lambda_cutoff, nm.kbt, t);
        CHECK(std::abs(cumulative_decoherence(nm, t) - closed) / closed <= 0.05);
    }
}

TEST_CASE("Gamma is the time integral of gamma") {
    const BathSpec b = paper_bath();
    // composite Simpson on gamma vs direct (1 - cos)/w^2 quadrature
    const double t_end = 20.0;
    const int n = 200;
    const double h = t_end / n;
    double simpson = dephasing_rate(b, 0.0) + dephasing_rate(b, t_end);
    for (int k = 1; k < n; ++k) simpson += (k % 2 ? 4.0 : 2.0) * dephasing_rate(b, k * h);
    simpson *= h / 3.0;
    CHECK(cumulative_decoherence(b, t_end) == doctest::Approx(simpson).epsilon(1e-6));
}

TEST_CASE("Gamma nondecreasing where gamma is positive") {
    const BathSpec b = paper_bath();
    double prev = 0.0;
    for (double t = 0.5; t <= 60.0; t += 0.5) {
        const double g = cumulative_decoherence(b, t);
        CHECK(g >= prev);
        prev = g;
    }
}

TEST_CASE("Lamb kernel") {
    const BathSpec b = paper_bath();
    const LambKernel zero = lamb_kernel(b, 0.0);
    CHECK(zero.mu == 0.0);
    CHECK(zero.big_m == 0.0);
    CHECK(lamb_kernel(b, 100.0).mu == doctest::Approx(5e-4).epsilon(1e-12));
    CHECK(lamb_kernel(b, 1e7).mu == doctest::Approx(1e-3).epsilon(1e-6));
    CHECK(lamb_kernel(paper_bath(Memory::markov), 50.0).mu == 0.0);

    // closed form vs quadrature on a 20-point grid
    for (int k = 1; k <= 20; ++k) {
        const double t = 15.0 * k;
        CHECK(lamb_kernel(b, t).mu == doctest::Approx(mu_by_quadrature(b, t)).epsilon(1e-8));
    }

    // M is the integral of mu: Simpson check, including the small-argument series branch
    for (double t_end : {0.05, 2.0, 150.0}) {
        const int n = 400;
        const double h = t_end / n;
        double simpson = lamb_kernel(b, t_end).mu;
        for (int k = 1; k < n; ++k) simpson += (k % 2 ? 4.0 : 2.0) * lamb_kernel(b, k * h).mu;
        simpson *= h / 3.0;
        CHECK(lamb_kernel(b, t_end).big_m == doctest::Approx(simpson).epsilon(1e-8));
    }
}

TEST_CASE("kernels are linear in eta") {
    BathSpec b = paper_bath();
    BathSpec scaled = b;
    scaled.eta = 3.0 * b.eta;
    for (double t : {0.7, 4.0, 25.0}) {
        CHECK(dephasing_rate(scaled, t) == doctest::Approx(3.0 * dephasing_rate(b, t)).epsilon(1e-9));
        CHECK(cumulative_decoherence(scaled, t) ==
              doctest::Approx(3.0 * cumulative_decoherence(b, t)).epsilon(1e-9));
        CHECK(lamb_kernel(scaled, t).mu == doctest::Approx(3.0 * lamb_kernel(b, t).mu).epsilon(1e-12));
        CHECK(lamb_kernel(scaled, t).big_m ==
              doctest::Approx(3.0 * lamb_kernel(b, t).big_m).epsilon(1e-12));
    }
}

TEST_CASE("DecoherenceKernels dispatches on memory mode") {
    const DecoherenceKernels markov(paper_bath(Memory::markov));
    CHECK(markov.gamma(3.0) == doctest::Approx(0.1));
    CHECK(markov.big_gamma(3.0) == doctest::Approx(0.3));
    CHECK(markov.mu(3.0) == 0.0);
    CHECK(markov.big_m(3.0) == 0.0);

    const DecoherenceKernels nm(paper_bath());
    CHECK(nm.gamma(0.0) == 0.0);
    CHECK(nm.big_gamma(0.0) == 0.0);
    CHECK(nm.mu(0.0) == 0.0);
    CHECK(nm.big_m(0.0) == 0.0);
}

TEST_CASE("interpolated gamma table matches direct quadrature") {
    const DecoherenceKernels nm(paper_bath());
    const auto table = nm.gamma_table(30.0);
    for (double t = 0.0; t <= 30.0; t += 0.37) {
        CHECK(std::abs(table(t) - nm.gamma(t)) < 1e-12);
    }
}
