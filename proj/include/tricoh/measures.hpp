#pragma once

#include "tricoh/states.hpp"

namespace tricoh {

/// Von Neumann entropy in nats. Eigenvalues in [-1e-8, 0) are treated as roundoff and
/// dropped; anything more negative raises InvalidStateError.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of a probability vector (nats), same clamping rules as above.
double shannon_entropy(const Eigen::VectorXd& probabilities);

/// Strike the off-diagonal entries in the computational basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// C_R(rho) = S(dephase(rho)) - S(rho), clamped at zero for roundoff-sized negatives.
double rel_entropy_coherence(const DensityMatrix& rho);

/// Sum of |rho_mn| over m != n.
double l1_coherence(const DensityMatrix& rho);

}  // namespace tricoh
