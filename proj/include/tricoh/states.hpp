#pragma once

#include <complex>
#include <span>
#include <string_view>

#include <Eigen/Core>

namespace tricoh {

inline constexpr int kQubits = 3;
inline constexpr int kDim = 8;

using Matrix8cd = Eigen::Matrix<std::complex<double>, kDim, kDim>;
using Vector8cd = Eigen::Matrix<std::complex<double>, kDim, 1>;

// Basis index m in 0..7 is the bitstring q1 q2 q3 with qubit 1 as the most significant bit.

struct Tolerances {
    double hermiticity = 1e-12;
    double trace = 1e-12;
    double negativity = 1e-10;
};

struct ValidityReport {
    double hermiticity_residual = 0.0;
    double trace_residual = 0.0;
    double min_eigenvalue = 0.0;
    bool hermitian = false;
    bool unit_trace = false;
    bool positive = false;

    bool ok() const { return hermitian && unit_trace && positive; }
};

/// Residuals of an arbitrary 8x8 matrix against the density-matrix invariants.
/// Positivity is judged on the Hermitian part.
ValidityReport validate(const Matrix8cd& rho, const Tolerances& tol = {});

/// Hermitian, unit-trace, positive semidefinite operator on the three-qubit register.
class DensityMatrix {
public:
    /// Throws DomainError if any invariant fails under `tol`.
    static DensityMatrix from_matrix(const Matrix8cd& rho, const Tolerances& tol = {});

    const Matrix8cd& matrix() const { return rho_; }
    std::complex<double> operator()(int m, int n) const { return rho_(m, n); }

    /// tr(rho^2)
    double purity() const;

private:
    explicit DensityMatrix(const Matrix8cd& rho) : rho_(rho) {}
    Matrix8cd rho_;
};

enum class StateName { ghz, w, wbar, wwbar, star, ghz_w_mix, werner_ghz, werner_w };

std::string_view to_string(StateName name);
StateName parse_state_name(std::string_view name);
bool is_mixture(StateName name);
std::span<const StateName> all_state_names();

struct StateSpec {
    StateName name = StateName::ghz;
    /// Mixing probability, only meaningful for the three mixtures.
    double p = 1.0;

    void validate() const;
};

/// Amplitudes of a pure state; DomainError for the mixtures.
Vector8cd pure_state(StateName name);

DensityMatrix make_state(const StateSpec& spec);

}  // namespace tricoh
