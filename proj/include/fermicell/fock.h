#pragma once

// Fermionic ladder operators on the occupation basis. The Jordan-Wigner string
// of a_gamma(x) runs over every occupied bit with a lower global index 4x+gamma.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermicell/basis.h"
#include "fermicell/evolution.h"
#include "fermicell/exact_matrix.h"
#include "fermicell/linalg.h"

namespace fermicell {

struct FockOperator {
    SparseComplex matrix;
    std::string label;
};

struct LadderOp {
    int bit;
    bool dagger;
};

/// coefficient * ops[0] ops[1] ... ops[k-1]; the last operator acts first.
struct FockTerm {
    cplx coefficient;
    std::vector<LadderOp> ops;
};

/// Applies a product of ladder operators to one configuration. Returns the image and its sign,
/// or nothing when the product annihilates the configuration.
std::optional<std::pair<BitConfig, int>> apply_ladder(const BitConfig &config, const std::vector<LadderOp> &ops);

/// Matrix of a sum of terms over a basis. Throws when a term leaves the basis.
SparseComplex term_matrix(const Basis &basis, const std::vector<FockTerm> &terms);

FockOperator annihilator(const Basis &basis, int x, int gamma);
FockOperator creator(const Basis &basis, int x, int gamma);

SparseComplex anticommutator(const SparseComplex &a, const SparseComplex &b);
SparseComplex commutator(const SparseComplex &a, const SparseComplex &b);
double max_abs(const SparseComplex &m);

/// [a+_R1 a_R2 - a+_R2 a_R1][a+_L1 a_L2 - a+_L2 a_L1] at site x.
std::vector<FockTerm> scatter_generator_terms(int x);

/// The local 16x16 operator exp{(i pi / 2) Q} by dense matrix exponential.
Eigen::MatrixXcd site_interaction_exponential();

/// Product over sites of the local exponentials, on the given basis.
StepOperator build_S_int_fock(const Basis &basis);

/// N-ordered exp{sum_x a+(x +- 1)[a(x) - a(x +- 1)]} for one species on its own M_x-mode Fock
/// space (index bit x is site x), expanded exactly with rational coefficients.
ExactMatrix build_S_free_species(int sites, Mover mover);

/// Direct product of the four species factors. Each factor is taken in its own
/// species-local mode order, i.e. modes are ordered species first, then site.
StepOperator build_S_free_fock(const Basis &basis);

struct LatticeHamiltonian {
    SparseComplex free;
    SparseComplex interaction;
    double epsilon = 1.0;

    SparseComplex total() const { return free + interaction; }
};

/// H_free = i sum_x sum_a [a+_La D a_La - a+_Ra D a_Ra] with D f(x) = (f(x+1) - f(x-1)) / (2 epsilon),
/// and H_int = -(pi / (2 epsilon)) sum_x Q_x.
LatticeHamiltonian build_H_lattice(const Basis &basis, double epsilon = 1.0);

/// Two-mover packet: a right mover of `right` at `center_right` and a left mover of `left` at
/// `center_left`, each with a Gaussian envelope exp(-d^2 / (4 width^2)) in periodic distance.
Eigen::VectorXcd gaussian_pair(const Basis &basis, Species right, double center_right, Species left,
                               double center_left, double width);
/// Single mover with the same envelope.
Eigen::VectorXcd gaussian_single(const Basis &basis, Species species, double center, double width);

struct TrotterReport {
    double width = 0;
    int steps = 0;
    double automaton_vs_alternating = 0;  // (i) vs (ii)
    double automaton_vs_continuum = 0;    // (i) vs (iii)
    double alternating_vs_continuum = 0;  // (ii) vs (iii)
};

/// Compares n automaton steps, n alternating lattice exponentials and exp(-i n eps H) on q0.
TrotterReport trotter_compare(const Basis &basis, const Eigen::VectorXcd &q0, int n_steps, double width = 0);

struct TrotterScan {
    std::vector<TrotterReport> reports;
    bool monotone = false;  // automaton_vs_continuum strictly decreasing in width
};

/// Two-particle packets (R1 and L2, color-1 parity one) meeting halfway through the run.
TrotterScan trotter_width_scan(int sites, int n_steps, const std::vector<double> &widths);

/// "row col re im" lines, row-major.
std::string to_triplets(const SparseComplex &m);

}  // namespace fermicell
