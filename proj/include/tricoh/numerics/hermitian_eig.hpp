#pragma once

#include <Eigen/Core>

namespace tricoh::numerics {

struct HermitianEig {
    Eigen::VectorXd eigenvalues;   // descending
    Eigen::MatrixXcd eigenvectors; // orthonormal columns, column k pairs with eigenvalues[k]
};

/// Largest |H(i,j) - conj(H(j,i))| over all entries.
double hermiticity_residual(const Eigen::MatrixXcd& h);

/// Cyclic complex Jacobi diagonalization of a small Hermitian matrix.
/// The input is symmetrized as (H + H^dagger)/2 first; a Hermiticity residual
/// above 1e-8 is rejected with DomainError.
HermitianEig hermitian_eigendecomposition(const Eigen::MatrixXcd& h);

}  // namespace tricoh::numerics
