#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "tricoh/bath.hpp"
#include "tricoh/coherence_trace.hpp"
#include "tricoh/states.hpp"

namespace tricoh {

/// Collective spin eigenvalue Z(m) = sum_i (1 - 2 bit_i(m)), with sigma_z|0> = +|0>.
constexpr int z_weight(int m) {
    int z = 0;
    for (int bit = 0; bit < kQubits; ++bit) z += ((m >> bit) & 1) ? -1 : 1;
    return z;
}

/// Number of qubits on which basis states m and n differ.
constexpr int hamming(int m, int n) {
    int x = m ^ n;
    int count = 0;
    for (; x != 0; x &= x - 1) ++count;
    return count;
}

/// Bit of qubit `qubit` (0-based, qubit 0 = most significant) in basis index m.
constexpr int qubit_bit(int m, int qubit) { return (m >> (kQubits - 1 - qubit)) & 1; }

struct PropagatorSpec {
    static constexpr double omega0 = 1.0;

    BathSpec bath;
    Engine engine = Engine::closed_form;
    /// Per-qubit environments for the local topology; `bath` is used for all three if unset.
    std::optional<std::array<BathSpec, kQubits>> qubit_baths;
    /// When false the common-bath Lamb phase M(t) (and mu(t)) is forced to zero.
    bool include_lamb_phase = true;

    void validate() const;
    BathSpec qubit_bath(int qubit) const;
};

/// Accumulated kernels at one instant; what the elementwise solution needs.
struct KernelSnapshot {
    double t = 0.0;
    std::array<double, kQubits> big_gamma{};  // per qubit (local) or shared (common, index 0)
    double big_m = 0.0;
};

KernelSnapshot snapshot_kernels(const PropagatorSpec& spec, double t);

/// E(m, n, t) with rho_mn(t) = rho_mn(0) exp(E).
std::complex<double> decoherence_exponent(const PropagatorSpec& spec, int m, int n, double t);
std::complex<double> decoherence_exponent(const PropagatorSpec& spec, int m, int n,
                                          const KernelSnapshot& kernels);

DensityMatrix propagate(const PropagatorSpec& spec, const DensityMatrix& rho0, double t);

/// States at every time of an increasing grid starting at 0. Kernels are evaluated once per
/// grid time (closed form) or a single trajectory is integrated (ode).
std::vector<DensityMatrix> propagate_grid(const PropagatorSpec& spec, const DensityMatrix& rho0,
                                          std::span<const double> times);

/// Right-hand side of the master equation for the configured topology and memory mode,
/// acting on rho at time t with the supplied gamma values (one per qubit for local).
Matrix8cd master_equation_rhs(const PropagatorSpec& spec, const Matrix8cd& rho,
                              const std::array<double, kQubits>& gamma, double mu);

/// C_R sampled on a gamma_0 t grid (must start at 0, strictly increasing).
CoherenceTrace coherence_trace(const PropagatorSpec& spec, const StateSpec& state,
                               std::span<const double> gamma0_t_grid);

/// n evenly spaced points on [0, t_max].
std::vector<double> uniform_grid(double t_max, int n_points);

}  // namespace tricoh
