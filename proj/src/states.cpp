#include "tricoh/states.hpp"

#include <array>
#include <cmath>
#include <string>

#include "tricoh/errors.hpp"
#include "tricoh/numerics/hermitian_eig.hpp"

namespace tricoh {

namespace {

constexpr std::array<StateName, 8> kAllStates = {
    StateName::ghz,       StateName::w,          StateName::wbar,     StateName::wwbar,
    StateName::star,      StateName::ghz_w_mix,  StateName::werner_ghz, StateName::werner_w};

Vector8cd superposition(std::initializer_list<int> indices) {
    Vector8cd v = Vector8cd::Zero();
    const double amp = 1.0 / std::sqrt(static_cast<double>(indices.size()));
    for (int idx : indices) v(idx) = amp;
    return v;
}

Matrix8cd projector(const Vector8cd& v) { return v * v.adjoint(); }

}  // namespace

ValidityReport validate(const Matrix8cd& rho, const Tolerances& tol) {
    ValidityReport report;
    report.hermiticity_residual = numerics::hermiticity_residual(rho);
    report.trace_residual = std::abs(rho.trace() - 1.0);
    const Matrix8cd hermitian_part = 0.5 * (rho + rho.adjoint());
    if (hermitian_part.allFinite()) {
        report.min_eigenvalue = numerics::hermitian_eigendecomposition(hermitian_part).eigenvalues(kDim - 1);
    } else {
        report.min_eigenvalue = -std::numeric_limits<double>::infinity();
    }
    report.hermitian = report.hermiticity_residual < tol.hermiticity;
    report.unit_trace = report.trace_residual < tol.trace;
    report.positive = report.min_eigenvalue > -tol.negativity;
    return report;
}

DensityMatrix DensityMatrix::from_matrix(const Matrix8cd& rho, const Tolerances& tol) {
    const ValidityReport r = validate(rho, tol);
    if (!r.ok()) {
        std::string what = "not a valid density matrix:";
        if (!r.hermitian) what += " hermiticity residual " + std::to_string(r.hermiticity_residual);
        if (!r.unit_trace) what += " trace residual " + std::to_string(r.trace_residual);
        if (!r.positive) what += " min eigenvalue " + std::to_string(r.min_eigenvalue);
        throw DomainError(what);
    }
    return DensityMatrix(rho);
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

std::string_view to_string(StateName name) {
    switch (name) {
        case StateName::ghz: return "ghz";
        case StateName::w: return "w";
        case StateName::wbar: return "wbar";
        case StateName::wwbar: return "wwbar";
        case StateName::star: return "star";
        case StateName::ghz_w_mix: return "ghz-w";
        case StateName::werner_ghz: return "werner-ghz";
        case StateName::werner_w: return "werner-w";
    }
    return "?";
}

StateName parse_state_name(std::string_view name) {
    for (StateName s : kAllStates)
        if (to_string(s) == name) return s;
    throw DomainError("unknown state '" + std::string(name) + "'");
}

bool is_mixture(StateName name) {
    return name == StateName::ghz_w_mix || name == StateName::werner_ghz ||
           name == StateName::werner_w;
}

std::span<const StateName> all_state_names() { return kAllStates; }

void StateSpec::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("mixing probability p = " + std::to_string(p) + " outside [0, 1]");
    }
}

Vector8cd pure_state(StateName name) {
    switch (name) {
        case StateName::ghz: return superposition({0b000, 0b111});
        case StateName::w: return superposition({0b100, 0b010, 0b001});
        case StateName::wbar: return superposition({0b011, 0b101, 0b110});
        case StateName::wwbar:
            return (pure_state(StateName::w) + pure_state(StateName::wbar)) / std::sqrt(2.0);
        // qubits 1 and 2 peripheral, qubit 3 central
        case StateName::star: return superposition({0b000, 0b100, 0b101, 0b111});
        default: break;
    }
    throw DomainError("'" + std::string(to_string(name)) + "' is a mixed state");
}

DensityMatrix make_state(const StateSpec& spec) {
    spec.validate();
    const double p = spec.p;
    const Matrix8cd maximally_mixed = Matrix8cd::Identity() / static_cast<double>(kDim);
    Matrix8cd rho;
    switch (spec.name) {
        case StateName::ghz_w_mix:
            rho = p * projector(pure_state(StateName::ghz)) +
                  (1.0 - p) * projector(pure_state(StateName::w));
            break;
        case StateName::werner_ghz:
            rho = p * projector(pure_state(StateName::ghz)) + (1.0 - p) * maximally_mixed;
            break;
        case StateName::werner_w:
            rho = p * projector(pure_state(StateName::w)) + (1.0 - p) * maximally_mixed;
            break;
        default:
            rho = projector(pure_state(spec.name));
            break;
    }
    return DensityMatrix::from_matrix(rho);
}

}  // namespace tricoh
