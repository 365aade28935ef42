#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tricoh/dynamics.hpp"
#include "tricoh/errors.hpp"
#include "tricoh/measures.hpp"

using namespace tricoh;

namespace {

PropagatorSpec make_spec(Topology topology, Memory memory, Engine engine = Engine::closed_form) {
    PropagatorSpec s;
    s.bath.topology = topology;
    s.bath.memory = memory;
    s.engine = engine;
    return s;
}

double max_diff(const DensityMatrix& a, const DensityMatrix& b) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("index weights") {
    CHECK(z_weight(0b000) == 3);
    CHECK(z_weight(0b111) == -3);
    CHECK(z_weight(0b100) == 1);
    CHECK(z_weight(0b011) == -1);
    for (int m = 0; m < 8; ++m) {
        for (int n = 0; n < 8; ++n) {
            CHECK(hamming(m, n) == hamming(n, m));
            CHECK((hamming(m, n) == 0) == (m == n));
        }
    }
    CHECK(hamming(0b000, 0b111) == 3);
    CHECK(qubit_bit(0b100, 0) == 1);
    CHECK(qubit_bit(0b100, 2) == 0);
}

TEST_CASE("decoherence exponents") {
    const double t = 7.0;
    const double g0t = 0.1 * t;
    for (Topology topo : {Topology::local, Topology::common}) {
        for (Memory mem : {Memory::markov, Memory::non_markov}) {
            const PropagatorSpec s = make_spec(topo, mem);
            for (int m = 0; m < 8; ++m) CHECK(decoherence_exponent(s, m, m, t) == std::complex<double>{});
        }
    }
    const auto common = decoherence_exponent(make_spec(Topology::common, Memory::markov), 0, 7, t);
    CHECK(common.real() == doctest::Approx(-18.0 * g0t));
    CHECK(common.imag() == doctest::Approx(-3.0 * t));
    const auto local = decoherence_exponent(make_spec(Topology::local, Memory::markov), 0, 7, t);
    CHECK(local.real() == doctest::Approx(-6.0 * g0t));
}

TEST_CASE("t = 0 leaves the state unchanged") {
    const DensityMatrix rho = make_state({StateName::star});
    for (Engine e : {Engine::closed_form, Engine::ode}) {
        const PropagatorSpec s = make_spec(Topology::common, Memory::markov, e);
        CHECK(max_diff(propagate(s, rho, 0.0), rho) == 0.0);
    }
}

TEST_CASE("W is decoherence-free in a common bath") {
    const DensityMatrix w = make_state({StateName::w});
    for (Memory mem : {Memory::markov, Memory::non_markov}) {
        for (Engine e : {Engine::closed_form, Engine::ode}) {
            const PropagatorSpec s = make_spec(Topology::common, mem, e);
            for (double t : {1.0, 12.0, 30.0}) CHECK(max_diff(propagate(s, w, t), w) < 1e-10);
        }
    }
}

TEST_CASE("GHZ in a common Markov bath") {
    const DensityMatrix ghz = make_state({StateName::ghz});
    const double t = 1.0;  // gamma_0 t = 0.1
    for (Engine e : {Engine::closed_form, Engine::ode}) {
        const DensityMatrix r = propagate(make_spec(Topology::common, Memory::markov, e), ghz, t);
        CHECK(std::abs(r(0, 7)) == doctest::Approx(0.5 * std::exp(-1.8)).epsilon(1e-8));
        CHECK(std::abs(r(0, 7)) == doctest::Approx(0.08264).epsilon(1e-4));
    }
}

TEST_CASE("engines agree, including heterogeneous local baths") {
    const std::vector<double> grid = uniform_grid(10.0, 11);
    for (StateName name : {StateName::ghz, StateName::wwbar, StateName::star}) {
        const DensityMatrix rho = make_state({name});
        for (Topology topo : {Topology::local, Topology::common}) {
            for (Memory mem : {Memory::markov, Memory::non_markov}) {
                PropagatorSpec cf = make_spec(topo, mem, Engine::closed_form);
                PropagatorSpec ode = make_spec(topo, mem, Engine::ode);
                const auto a = propagate_grid(cf, rho, grid);
                const auto b = propagate_grid(ode, rho, grid);
                for (std::size_t k = 0; k < grid.size(); ++k) CHECK(max_diff(a[k], b[k]) < 1e-6);
            }
        }
    }

    std::array<BathSpec, 3> baths{};
    baths[0].eta = 0.05;
    baths[1].eta = 0.1;
    baths[2].eta = 0.2;
    baths[2].kbt = 0.12;
    for (Memory mem : {Memory::markov, Memory::non_markov}) {
        PropagatorSpec cf = make_spec(Topology::local, mem, Engine::closed_form);
        cf.qubit_baths = baths;
        PropagatorSpec ode = cf;
        ode.engine = Engine::ode;
        const DensityMatrix rho = make_state({StateName::star});
        const auto a = propagate_grid(cf, rho, grid);
        const auto b = propagate_grid(ode, rho, grid);
        for (std::size_t k = 0; k < grid.size(); ++k) CHECK(max_diff(a[k], b[k]) < 1e-6);
        // heterogeneity actually matters: qubit 3 decoheres fastest
        const DensityMatrix uniform = propagate(make_spec(Topology::local, mem), rho, 10.0);
        CHECK(max_diff(a.back(), uniform) > 1e-6);
    }
}

TEST_CASE("populations are constants of motion") {
    const DensityMatrix rho = make_state({StateName::ghz_w_mix, 0.3});
    const std::vector<double> grid = uniform_grid(8.0, 5);
    for (Engine e : {Engine::closed_form, Engine::ode}) {
        for (Topology topo : {Topology::local, Topology::common}) {
            const auto states = propagate_grid(make_spec(topo, Memory::markov, e), rho, grid);
            for (const DensityMatrix& s : states) {
                const double drift = (s.matrix().diagonal() - rho.matrix().diagonal()).cwiseAbs().maxCoeff();
                if (e == Engine::closed_form) CHECK(drift == 0.0);
                else CHECK(drift < 1e-8);
            }
        }
    }
}

TEST_CASE("Markov envelopes never grow") {
    const DensityMatrix rho = make_state({StateName::wwbar});
    const std::vector<double> grid = uniform_grid(20.0, 41);
    for (Topology topo : {Topology::local, Topology::common}) {
        const auto states = propagate_grid(make_spec(topo, Memory::markov), rho, grid);
        for (std::size_t k = 1; k < states.size(); ++k)
            for (int m = 0; m < 8; ++m)
                for (int n = 0; n < 8; ++n)
                    CHECK(std::abs(states[k](m, n)) <= std::abs(states[k - 1](m, n)) + 1e-15);
    }
}

TEST_CASE("common-bath magnitudes are constant exactly when Z(m) = Z(n)") {
    const DensityMatrix rho = make_state({StateName::wwbar});
    const DensityMatrix r = propagate(make_spec(Topology::common, Memory::markov), rho, 5.0);
    for (int m = 0; m < 8; ++m) {
        for (int n = 0; n < 8; ++n) {
            if (std::abs(rho(m, n)) < 1e-12) continue;
            const bool same = z_weight(m) == z_weight(n);
            const double ratio = std::abs(r(m, n)) / std::abs(rho(m, n));
            if (same) CHECK(ratio == doctest::Approx(1.0).epsilon(1e-14));
            else CHECK(ratio < 0.9);
        }
    }
}

TEST_CASE("Lamb phase does not change C_R") {
    const std::vector<double> grid = uniform_grid(3.0, 31);
    for (StateName name : all_state_names()) {
        PropagatorSpec with = make_spec(Topology::common, Memory::non_markov);
        PropagatorSpec without = with;
        without.include_lamb_phase = false;
        const StateSpec st{name, 0.5};
        const CoherenceTrace a = coherence_trace(with, st, grid);
        const CoherenceTrace b = coherence_trace(without, st, grid);
        for (std::size_t k = 0; k < grid.size(); ++k)
            CHECK(std::abs(a.samples[k].c_r - b.samples[k].c_r) < 1e-12);
    }
}

TEST_CASE("coherence trace values") {
    const std::vector<double> grid = uniform_grid(3.0, 31);
    const CoherenceTrace w = coherence_trace(make_spec(Topology::common, Memory::markov), {StateName::w}, grid);
    CHECK(w.well_formed());
    for (const CoherenceSample& s : w.samples) CHECK(s.c_r == doctest::Approx(1.098612).epsilon(1e-6));

    for (Topology topo : {Topology::local, Topology::common}) {
        const CoherenceTrace ghz = coherence_trace(make_spec(topo, Memory::markov), {StateName::ghz}, grid);
        CHECK(ghz.samples.front().c_r == doctest::Approx(0.693147).epsilon(1e-6));
        const CoherenceTrace wr =
            coherence_trace(make_spec(topo, Memory::non_markov), {StateName::werner_w, 0.1}, grid);
        CHECK(std::abs(wr.samples.front().c_r - 0.0216) < 1e-3);
    }

    // GHZ local Markov: off-diagonal factor e^{-6 gamma_0 t}
    const CoherenceTrace ghz_local =
        coherence_trace(make_spec(Topology::local, Memory::markov), {StateName::ghz}, grid);
    for (const CoherenceSample& s : ghz_local.samples)
        CHECK(s.c_r == doctest::Approx(oracle::two_level_coherence(std::exp(-6.0 * s.gamma0_t))).epsilon(1e-9));
}

TEST_CASE("coherence trace input errors") {
    const std::vector<double> bad{0.0, 0.2, 0.1};
    CHECK_THROWS_AS(coherence_trace(make_spec(Topology::local, Memory::markov), {StateName::ghz}, bad),
                    DomainError);
    PropagatorSpec zero = make_spec(Topology::local, Memory::markov);
    zero.bath.eta = 0.0;
    const std::vector<double> ok{0.0, 0.1};
    CHECK_THROWS_AS(coherence_trace(zero, {StateName::ghz}, ok), DomainError);
    CHECK_THROWS_AS(uniform_grid(1.0, 1), DomainError);
}
