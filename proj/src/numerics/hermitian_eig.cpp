#include "tricoh/numerics/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "tricoh/errors.hpp"

namespace tricoh::numerics {

namespace {

constexpr double kHermiticityTolerance = 1e-8;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm2(const Eigen::MatrixXcd& a) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) sum += std::norm(a(i, j));
    return sum;
}

}  // namespace

double hermiticity_residual(const Eigen::MatrixXcd& h) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j)
            worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
    return worst;
}

HermitianEig hermitian_eigendecomposition(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw DomainError("eigendecomposition needs a non-empty square matrix");
    }
    if (!h.allFinite()) throw DomainError("matrix has non-finite entries");
    if (hermiticity_residual(h) >= kHermiticityTolerance) {
        throw DomainError("matrix is not Hermitian within 1e-8");
    }

    const Eigen::Index n = h.rows();
    Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
    const double scale = std::max(a.squaredNorm(), std::numeric_limits<double>::min());
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm2(a) <= eps * eps * scale) break;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const std::complex<double> apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // negligible relative to both diagonal entries: just drop it
                if (std::abs(app) + 1e3 * mag == std::abs(app) &&
                    std::abs(aqq) + 1e3 * mag == std::abs(aqq) && sweep > 3) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const std::complex<double> phase = apq / mag;
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // J = Phi * R with Phi = diag(1, conj(phase)) on (p,q) and R the real rotation.
                const std::complex<double> jpp = c;
                const std::complex<double> jpq = s;
                const std::complex<double> jqp = -s * std::conj(phase);
                const std::complex<double> jqq = c * std::conj(phase);

                for (Eigen::Index k = 0; k < n; ++k) {
                    const std::complex<double> akp = a(k, p);
                    const std::complex<double> akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                    const std::complex<double> vkp = v(k, p);
                    const std::complex<double> vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const std::complex<double> apk = a(p, k);
                    const std::complex<double> aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEig result{Eigen::VectorXd(n), Eigen::MatrixXcd(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        result.eigenvalues(k) = a(src, src).real();
        result.eigenvectors.col(k) = v.col(src);
    }
    return result;
}

}  // namespace tricoh::numerics
