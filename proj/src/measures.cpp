#include "tricoh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tricoh/errors.hpp"
#include "tricoh/numerics/hermitian_eig.hpp"

namespace tricoh {

namespace {
constexpr double kNegativeEigenvalueLimit = -1e-8;
constexpr double kCoherenceClamp = -1e-10;
}  // namespace

double shannon_entropy(const Eigen::VectorXd& probabilities) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
        const double lambda = probabilities(i);
        if (lambda < kNegativeEigenvalueLimit) {
            throw InvalidStateError("eigenvalue " + std::to_string(lambda) + " is below -1e-8");
        }
        const double clamped = std::clamp(lambda, 0.0, 1.0);
        if (clamped > 0.0) s -= clamped * std::log(clamped);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return shannon_entropy(numerics::hermitian_eigendecomposition(rho.matrix()).eigenvalues);
}

DensityMatrix dephase(const DensityMatrix& rho) {
    Matrix8cd d = Matrix8cd::Zero();
    d.diagonal() = rho.matrix().diagonal();
    return DensityMatrix::from_matrix(d);
}

double rel_entropy_coherence(const DensityMatrix& rho) {
    const Eigen::VectorXd populations = rho.matrix().diagonal().real();
    const double c = shannon_entropy(populations) - von_neumann_entropy(rho);
    if (c < 0.0 && c >= kCoherenceClamp) return 0.0;
    return c;
}

double l1_coherence(const DensityMatrix& rho) {
    double sum = 0.0;
    for (int m = 0; m < kDim; ++m)
        for (int n = 0; n < kDim; ++n)
            if (m != n) sum += std::abs(rho(m, n));
    return sum;
}

}  // namespace tricoh
