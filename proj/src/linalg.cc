#include "fermicell/linalg.h"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace fermicell {

double principal_phase(double phase, double tol) {
    constexpr double pi = std::numbers::pi;
    double p = std::remainder(phase, 2 * pi);
    if (p <= -pi + tol) {
        p = pi;
    }
    return p;
}

UnitarySpectrum unitary_spectrum(const Eigen::MatrixXcd &u, double branch_tol) {
    constexpr double pi = std::numbers::pi;
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
    UnitarySpectrum out;
    out.vectors = schur.matrixU();
    const auto &t = schur.matrixT();
    out.phases.resize(u.rows());
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        double phase = std::arg(t(i, i));
        if (std::abs(std::abs(phase) - pi) < branch_tol) {
            phase = pi;
            ++out.branch_cut_hits;
        }
        out.phases(i) = phase;
    }
    return out;
}

Eigen::MatrixXcd hermitian_evolution(const Eigen::MatrixXcd &h, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        phases(i) = std::polar(1.0, -t * es.eigenvalues()(i));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::VectorXcd expm_multiply(const SparseComplex &h, const Eigen::VectorXcd &v, double t) {
    double norm1 = 0;
    for (Eigen::Index k = 0; k < h.outerSize(); ++k) {
        double col = 0;
        for (SparseComplex::InnerIterator it(h, k); it; ++it) {
            col += std::abs(it.value());
        }
        norm1 = std::max(norm1, col);
    }
    const int substeps = std::max(1, static_cast<int>(std::ceil(norm1 * std::abs(t) / 0.5)));
    const cplx dt(0, -t / substeps);
    Eigen::VectorXcd out = v;
    for (int s = 0; s < substeps; ++s) {
        Eigen::VectorXcd term = out;
        Eigen::VectorXcd sum = out;
        for (int k = 1; k < 60; ++k) {
            term = (dt / static_cast<double>(k)) * (h * term);
            sum += term;
            if (term.norm() <= 1e-17 * sum.norm()) {
                break;
            }
        }
        out = sum;
    }
    return out;
}

double max_abs(const Eigen::MatrixXcd &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const Eigen::MatrixXcd &m) { return max_abs(m - m.adjoint()); }

double unitarity_defect(const Eigen::MatrixXcd &m) {
    return max_abs(m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols()));
}

}  // namespace fermicell
