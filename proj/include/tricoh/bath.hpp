#pragma once

#include <numbers>
#include <string_view>

#include "tricoh/numerics/chebyshev.hpp"
#include "tricoh/numerics/quadrature.hpp"

// Units throughout: hbar = 1 and the qubit frequency omega_0 = 1, so frequencies and rates
// are in units of omega_0 and times in units of 1/omega_0.
namespace tricoh {

enum class Topology { local, common };
enum class Memory { markov, non_markov };

std::string_view to_string(Topology topology);
std::string_view to_string(Memory memory);
Topology parse_topology(std::string_view name);
Memory parse_memory(std::string_view name);

/// Ohmic dephasing environment J(w) = eta * w * exp(-w / lambda_cutoff) at temperature kbt.
struct BathSpec {
    double eta = 0.1;
    double lambda_cutoff = 0.01;
    double kbt = 1.0 / (4.0 * std::numbers::pi);
    Topology topology = Topology::local;
    Memory memory = Memory::markov;

    void validate() const;
};

double spectral_density(const BathSpec& bath, double omega);

/// Long-time Markov rate gamma_0 = 4 pi eta kbt.
double markov_rate(const BathSpec& bath);

/// gamma(t) = 2 \int_0^inf J(w) coth(w / 2kbt) sin(wt)/w dw, by quadrature.
/// Evaluates the memory-kernel formula irrespective of bath.memory.
double dephasing_rate(const BathSpec& bath, double t);

/// Gamma(t) = \int_0^t gamma. Markov mode returns gamma_0 t exactly; otherwise the
/// time integral is taken analytically and the remaining (1 - cos wt)/w^2 integral
/// is done by quadrature.
double cumulative_decoherence(const BathSpec& bath, double t);

struct LambKernel {
    double mu;     // rate
    double big_m;  // accumulated phase, \int_0^t mu
};

/// Imaginary part of the common-bath kernel: mu(t) = \int J(w)(1 - cos wt)/w dw and its integral.
/// Closed forms for the exponential cutoff. Zero in Markov mode.
LambKernel lamb_kernel(const BathSpec& bath, double t);

/// Mode-aware view of the four kernels. In Markov mode gamma is the constant gamma_0,
/// Gamma = gamma_0 t and mu = M = 0.
class DecoherenceKernels {
public:
    explicit DecoherenceKernels(BathSpec bath);

    const BathSpec& bath() const { return bath_; }

    double gamma(double t) const;
    double big_gamma(double t) const;
    double mu(double t) const;
    double big_m(double t) const;

    /// Interpolated gamma on [0, t_max] for integrators that query many off-grid times.
    /// Markov mode returns a constant table.
    numerics::ChebyshevSeries gamma_table(double t_max) const;

private:
    BathSpec bath_;
};

/// Quadrature settings used for the kernel integrals.
numerics::QuadratureSpec kernel_quadrature(const BathSpec& bath, double t);

}  // namespace tricoh
