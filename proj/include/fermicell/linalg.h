#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace fermicell {

using cplx = std::complex<double>;
using SparseComplex = Eigen::SparseMatrix<cplx>;
using SparseReal = Eigen::SparseMatrix<double>;

/// Spectral data of a unitary matrix U = V diag(exp(i phase)) V^dagger.
struct UnitarySpectrum {
    Eigen::MatrixXcd vectors;
    Eigen::VectorXd phases;  // principal branch (-pi, pi]
    int branch_cut_hits = 0;  // eigenvalues within tolerance of -1, recorded as +pi
};

/// Eigenphases of a unitary matrix via its complex Schur form, which is
/// diagonal for normal matrices and always comes with an orthonormal basis.
UnitarySpectrum unitary_spectrum(const Eigen::MatrixXcd &u, double branch_tol = 1e-9);

/// Maps an angle to (-pi, pi]; values within `tol` of -pi become +pi.
double principal_phase(double phase, double tol = 1e-12);

/// exp(-i t H) for Hermitian H via its eigendecomposition.
Eigen::MatrixXcd hermitian_evolution(const Eigen::MatrixXcd &h, double t);

/// exp(-i t H) v for sparse Hermitian H by a sub-stepped Taylor series.
Eigen::VectorXcd expm_multiply(const SparseComplex &h, const Eigen::VectorXcd &v, double t);

double max_abs(const Eigen::MatrixXcd &m);
double hermiticity_defect(const Eigen::MatrixXcd &m);
double unitarity_defect(const Eigen::MatrixXcd &m);

}  // namespace fermicell
