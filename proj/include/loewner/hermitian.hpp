#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <utility>

#include "loewner/interval.hpp"
#include "loewner/scalar_function.hpp"

namespace loewner {

double max_abs_entry(const Eigen::MatrixXcd& m);

/// max_{i,j} |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const Eigen::MatrixXcd& m);

/// A finite-dimensional Hermitian operator.  Construction validates the
/// symmetry invariant (defect <= 1e-12 * maxAbsEntry) and rejects otherwise.
struct HermitianMatrix {
    Eigen::MatrixXcd m;

    explicit HermitianMatrix(Eigen::MatrixXcd entries);
    int dim() const { return static_cast<int>(m.rows()); }
};

/// Eigensystem with ascending eigenvalues and unitary eigenvector columns.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
};

SpectralDecomposition eigen_decompose(const HermitianMatrix& h);

/// Functional calculus: U diag(f(lambda_i)) U*.  Every eigenvalue must lie in
/// f's domain; violations name the offending eigenvalue.
HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& h);

/// Loewner partial order test: min eig(y-x) >= -tol * max(1, maxAbsEntry(y-x)).
bool loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y, double tol = 1e-9);

/// Haar-ish random unitary (QR of a complex Gaussian with phase fix).
Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng);

/// Random Hermitian with iid uniform spectrum inside [box.first, box.second]
/// conjugated by a random unitary.
HermitianMatrix random_hermitian_in(std::pair<double, double> box, int n, std::mt19937_64& rng);

/// Deterministic ordered pair x <= y with both spectra strictly inside the
/// interval.  y = x + (random PSD bump of rank <= n) + tiny ridge, the bump's
/// spectral norm drawn log-uniformly in [1e-3, effective-length/4].
std::pair<HermitianMatrix, HermitianMatrix> sample_ordered_pair(const Interval& interval, int n,
                                                                std::uint64_t seed);

}  // namespace loewner
