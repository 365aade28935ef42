#include "tricoh/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "tricoh/errors.hpp"
#include "tricoh/measures.hpp"
#include "tricoh/numerics/ode.hpp"

namespace tricoh {

namespace {

using Matrix2cd = Eigen::Matrix<std::complex<double>, 2, 2>;

constexpr std::complex<double> kI{0.0, 1.0};

Matrix8cd kron3(const Matrix2cd& a, const Matrix2cd& b, const Matrix2cd& c) {
    Matrix8cd out;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            out(i, j) = a((i >> 2) & 1, (j >> 2) & 1) * b((i >> 1) & 1, (j >> 1) & 1) *
                        c(i & 1, j & 1);
        }
    }
    return out;
}

// sigma_z^i, S_z and H_S are diagonal in the computational basis; only their diagonals are kept.
struct SpinOperators {
    std::array<Vector8cd, kQubits> sigma_z;
    Vector8cd s_z;
    Vector8cd s_z2;
    Vector8cd h_system;

    SpinOperators() {
        Matrix2cd pauli_z;
        pauli_z << 1.0, 0.0, 0.0, -1.0;
        const Matrix2cd id = Matrix2cd::Identity();
        sigma_z[0] = kron3(pauli_z, id, id).diagonal();
        sigma_z[1] = kron3(id, pauli_z, id).diagonal();
        sigma_z[2] = kron3(id, id, pauli_z).diagonal();
        s_z = sigma_z[0] + sigma_z[1] + sigma_z[2];
        s_z2 = s_z.cwiseProduct(s_z);
        h_system = 0.5 * PropagatorSpec::omega0 * s_z;
    }
};

const SpinOperators& spin_operators() {
    static const SpinOperators ops;
    return ops;
}

constexpr Tolerances kPropagatedTolerance{1e-6, 1e-6, 1e-6};

DensityMatrix checked_output(const Matrix8cd& rho) {
    const Matrix8cd herm = 0.5 * (rho + rho.adjoint());
    const ValidityReport r = validate(herm, kPropagatedTolerance);
    if (!r.ok()) {
        std::ostringstream msg;
        msg << "propagated state violates invariants (trace residual " << r.trace_residual
            << ", min eigenvalue " << r.min_eigenvalue << ")";
        throw InternalConsistencyError(msg.str());
    }
    return DensityMatrix::from_matrix(herm, kPropagatedTolerance);
}

void require_grid(std::span<const double> times) {
    if (times.empty()) throw DomainError("time grid is empty");
    if (times.front() != 0.0) throw DomainError("time grid must start at 0");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1])) throw DomainError("time grid must be strictly increasing");
}

std::vector<DensityMatrix> propagate_closed_form(const PropagatorSpec& spec,
                                                 const DensityMatrix& rho0,
                                                 std::span<const double> times) {
    std::vector<DensityMatrix> out;
    out.reserve(times.size());
    double last_good = 0.0;
    for (double t : times) {
        KernelSnapshot kernels;
        try {
            kernels = snapshot_kernels(spec, t);
        } catch (const ConvergenceError& e) {
            throw PropagationError(std::string("kernel evaluation failed: ") + e.what(), last_good);
        }
        Matrix8cd rho = rho0.matrix();
        for (int m = 0; m < kDim; ++m)
            for (int n = 0; n < kDim; ++n)
                if (m != n) rho(m, n) *= std::exp(decoherence_exponent(spec, m, n, kernels));
        out.push_back(checked_output(rho));
        last_good = t;
    }
    return out;
}

std::vector<DensityMatrix> propagate_ode(const PropagatorSpec& spec, const DensityMatrix& rho0,
                                         std::span<const double> times) {
    const double t_end = times.back();
    if (t_end == 0.0) return {rho0};

    std::array<numerics::ChebyshevSeries, kQubits> gamma_tables;
    const int distinct_baths =
        (spec.bath.topology == Topology::local && spec.qubit_baths) ? kQubits : 1;
    double rate_scale = 3.0 * PropagatorSpec::omega0;
    for (int q = 0; q < distinct_baths; ++q) {
        const DecoherenceKernels kernels(spec.qubit_bath(q));
        gamma_tables[q] = kernels.gamma_table(t_end);
        rate_scale = std::max({rate_scale, markov_rate(kernels.bath()), gamma_tables[q](t_end)});
    }
    const BathSpec lamb_bath = spec.bath;
    const bool lamb = spec.include_lamb_phase && spec.bath.topology == Topology::common;

    auto derivative = [&](double t, std::span<const double> y, std::span<double> dydt) {
        Eigen::Map<const Eigen::Matrix<double, kDim, kDim>> re(y.data());
        Eigen::Map<const Eigen::Matrix<double, kDim, kDim>> im(y.data() + kDim * kDim);
        const Matrix8cd rho = re.cast<std::complex<double>>() + kI * im.cast<std::complex<double>>();
        std::array<double, kQubits> gamma{};
        for (int q = 0; q < distinct_baths; ++q) gamma[q] = gamma_tables[q](std::min(t, t_end));
        const double mu = lamb ? lamb_kernel(lamb_bath, t).mu : 0.0;
        const Matrix8cd d = master_equation_rhs(spec, rho, gamma, mu);
        Eigen::Map<Eigen::Matrix<double, kDim, kDim>> dre(dydt.data());
        Eigen::Map<Eigen::Matrix<double, kDim, kDim>> dim(dydt.data() + kDim * kDim);
        dre = d.real();
        dim = d.imag();
    };

    numerics::StateVector y0(2 * kDim * kDim);
    Eigen::Map<Eigen::Matrix<double, kDim, kDim>>(y0.data()) = rho0.matrix().real();
    Eigen::Map<Eigen::Matrix<double, kDim, kDim>>(y0.data() + kDim * kDim) = rho0.matrix().imag();

    numerics::OdeOptions options;
    options.max_step = 1e-2 / rate_scale;
    const numerics::Trajectory traj = numerics::ode_propagate(derivative, y0, times, options);

    std::vector<DensityMatrix> out;
    out.reserve(times.size());
    for (const numerics::StateVector& y : traj.states) {
        Eigen::Map<const Eigen::Matrix<double, kDim, kDim>> re(y.data());
        Eigen::Map<const Eigen::Matrix<double, kDim, kDim>> im(y.data() + kDim * kDim);
        out.push_back(checked_output(re.cast<std::complex<double>>() +
                                     kI * im.cast<std::complex<double>>()));
    }
    return out;
}

}  // namespace

std::string_view to_string(Engine engine) {
    return engine == Engine::closed_form ? "closed-form" : "ode";
}

Engine parse_engine(std::string_view name) {
    if (name == "closed-form" || name == "closed_form") return Engine::closed_form;
    if (name == "ode") return Engine::ode;
    throw DomainError("unknown engine '" + std::string(name) + "'");
}

bool CoherenceTrace::well_formed() const {
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (samples[k].c_r < -1e-10) return false;
        if (k > 0 && !(samples[k].gamma0_t > samples[k - 1].gamma0_t)) return false;
    }
    return true;
}

void PropagatorSpec::validate() const {
    bath.validate();
    if (qubit_baths) {
        for (const BathSpec& b : *qubit_baths) b.validate();
    }
}

BathSpec PropagatorSpec::qubit_bath(int qubit) const {
    if (!qubit_baths || bath.topology == Topology::common) return bath;
    BathSpec b = (*qubit_baths)[static_cast<std::size_t>(qubit)];
    b.topology = bath.topology;
    b.memory = bath.memory;
    return b;
}

KernelSnapshot snapshot_kernels(const PropagatorSpec& spec, double t) {
    spec.validate();
    KernelSnapshot k;
    k.t = t;
    if (spec.bath.topology == Topology::local) {
        for (int q = 0; q < kQubits; ++q) {
            const BathSpec b = spec.qubit_bath(q);
            if (q > 0 && !spec.qubit_baths) {
                k.big_gamma[q] = k.big_gamma[0];
                continue;
            }
            k.big_gamma[q] = cumulative_decoherence(b, t);
        }
    } else {
        k.big_gamma.fill(cumulative_decoherence(spec.bath, t));
        if (spec.include_lamb_phase) k.big_m = lamb_kernel(spec.bath, t).big_m;
    }
    return k;
}

std::complex<double> decoherence_exponent(const PropagatorSpec& spec, int m, int n,
                                          const KernelSnapshot& kernels) {
    if (m < 0 || m >= kDim || n < 0 || n >= kDim) throw DomainError("basis index out of range");
    const int zm = z_weight(m);
    const int zn = z_weight(n);
    const double free_phase = 0.5 * PropagatorSpec::omega0 * (zm - zn) * kernels.t;
    std::complex<double> e{0.0, -free_phase};
    if (spec.bath.topology == Topology::local) {
        for (int q = 0; q < kQubits; ++q)
            if (qubit_bit(m, q) != qubit_bit(n, q)) e -= 2.0 * kernels.big_gamma[q];
    } else {
        const int dz = zm - zn;
        e += kI * static_cast<double>(zm * zm - zn * zn) * kernels.big_m;
        e -= 0.5 * dz * dz * kernels.big_gamma[0];
    }
    return e;
}

std::complex<double> decoherence_exponent(const PropagatorSpec& spec, int m, int n, double t) {
    return decoherence_exponent(spec, m, n, snapshot_kernels(spec, t));
}

Matrix8cd master_equation_rhs(const PropagatorSpec& spec, const Matrix8cd& rho,
                              const std::array<double, kQubits>& gamma, double mu) {
    const SpinOperators& ops = spin_operators();
    const auto h = ops.h_system.asDiagonal();
    Matrix8cd d = -kI * (h * rho - rho * h);
    if (spec.bath.topology == Topology::local) {
        for (int q = 0; q < kQubits; ++q) {
            const double g = spec.qubit_baths ? gamma[q] : gamma[0];
            const auto sz = ops.sigma_z[q].asDiagonal();
            d += g * (sz * rho * sz - rho);
        }
    } else {
        const std::complex<double> alpha{0.5 * gamma[0], -mu};
        const auto sz = ops.s_z.asDiagonal();
        const auto sz2 = ops.s_z2.asDiagonal();
        d += gamma[0] * (sz * rho * sz) - alpha * (sz2 * rho) - std::conj(alpha) * (rho * sz2);
    }
    return d;
}

DensityMatrix propagate(const PropagatorSpec& spec, const DensityMatrix& rho0, double t) {
    if (!(t >= 0.0)) throw DomainError("propagation time must be non-negative");
    if (t == 0.0) return rho0;
    const std::array<double, 2> times{0.0, t};
    return propagate_grid(spec, rho0, times).back();
}

std::vector<DensityMatrix> propagate_grid(const PropagatorSpec& spec, const DensityMatrix& rho0,
                                          std::span<const double> times) {
    spec.validate();
    require_grid(times);
    if (spec.engine == Engine::closed_form) return propagate_closed_form(spec, rho0, times);
    return propagate_ode(spec, rho0, times);
}

std::vector<double> uniform_grid(double t_max, int n_points) {
    if (!(t_max > 0.0)) throw DomainError("t_max must be > 0");
    if (n_points < 2) throw DomainError("grid needs at least two points");
    std::vector<double> grid(static_cast<std::size_t>(n_points));
    for (int k = 0; k < n_points; ++k) grid[static_cast<std::size_t>(k)] = t_max * k / (n_points - 1);
    return grid;
}

CoherenceTrace coherence_trace(const PropagatorSpec& spec, const StateSpec& state,
                               std::span<const double> gamma0_t_grid) {
    require_grid(gamma0_t_grid);
    const double gamma0 = markov_rate(spec.bath);
    if (!(gamma0 > 0.0)) throw DomainError("gamma_0 t axis needs a non-zero Markov rate");

    std::vector<double> times(gamma0_t_grid.size());
    std::transform(gamma0_t_grid.begin(), gamma0_t_grid.end(), times.begin(),
                   [gamma0](double g) { return g / gamma0; });

    const DensityMatrix rho0 = make_state(state);
    CoherenceTrace trace{state, spec.bath, spec.engine, {}};
    trace.samples.reserve(times.size());

    std::vector<DensityMatrix> states;
    try {
        states = propagate_grid(spec, rho0, times);
    } catch (const PropagationError& e) {
        std::ostringstream msg;
        msg << e.what() << " (last good gamma0_t = " << e.last_good_time() * gamma0 << ")";
        throw PropagationError(msg.str(), e.last_good_time());
    }
    for (std::size_t k = 0; k < states.size(); ++k) {
        trace.samples.push_back({gamma0_t_grid[k], rel_entropy_coherence(states[k])});
    }
    return trace;
}

}  // namespace tricoh
