#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermicell/automaton.h"
#include "fermicell/basis.h"
#include "fermicell/lattice.h"
#include "fermicell/linalg.h"

namespace fermicell {

/// Largest dimension for dense matrix work unless overridden.
inline constexpr std::uint64_t kDefaultDenseCap = 4096;
/// Largest dimension for permutation-form operators unless overridden.
inline constexpr std::uint64_t kDefaultPermutationCap = std::uint64_t{1} << 16;

/// Real unit vector over the full configuration space, p_tau = q_tau^2.
struct WaveFunction {
    LatticeSpec spec;
    Eigen::VectorXd q;
    double t = 0;  // units of epsilon

    double norm_defect() const { return std::abs(q.squaredNorm() - 1.0); }
};

WaveFunction wavefunction_from_ensemble(const Ensemble &e);
WaveFunction delta_wavefunction(const BitConfig &config);
/// Ensemble with p_tau = q_tau^2, dropping exact zeros.
Ensemble probabilities(const WaveFunction &q);

enum class StepFactor { Full, Free, Int, Site };

std::string step_factor_name(StepFactor f);

/// Column rho holds a single entry sign[rho] in row target[rho].
struct PermutationForm {
    std::vector<std::uint64_t> target;
    std::vector<std::int8_t> sign;
};

/// Step evolution operator, either a signed permutation or a dense complex matrix.
class StepOperator {
   public:
    static StepOperator permutation(PermutationForm perm, StepFactor factor);
    static StepOperator dense(Eigen::MatrixXcd matrix, StepFactor factor);

    bool is_permutation() const { return is_perm_; }
    std::size_t dim() const;
    StepFactor factor() const { return factor_; }

    const PermutationForm &perm() const;
    /// Row of the single nonzero entry in each column is unique, and signs are all +1.
    bool is_unique_jump() const;
    const std::vector<std::uint64_t> &source() const { return source_; }

    Eigen::MatrixXcd to_dense() const;
    Eigen::MatrixXd to_dense_real() const;

   private:
    bool is_perm_ = true;
    StepFactor factor_ = StepFactor::Full;
    PermutationForm perm_;
    std::vector<std::uint64_t> source_;  // inverse map, filled for valid permutations
    Eigen::MatrixXcd dense_;
};

/// Product a * b (b acts first).
StepOperator compose(const StepOperator &a, const StepOperator &b);

/// Full-space automaton operator. Throws BudgetExceeded when 2^(4 M_x) exceeds `max_dim`.
StepOperator build_step_operator(const LatticeSpec &spec, StepFactor which,
                                 std::uint64_t max_dim = kDefaultPermutationCap);
/// Operator restricted to a charge sector (every factor preserves N_R, N_L and color-1 parity).
StepOperator build_step_operator(const Basis &basis, StepFactor which);
/// The 16x16 local scatter matrix.
StepOperator build_site_operator();

WaveFunction apply_step(const StepOperator &s, const WaveFunction &q);
Eigen::VectorXcd apply_step(const StepOperator &s, const Eigen::VectorXcd &q);

/// H with S = exp(-i epsilon H) and eigenphases of S in (-pi, pi].
struct Hamiltonian {
    Eigen::MatrixXcd matrix;
    double epsilon = 1.0;
    Eigen::MatrixXcd vectors;  // orthonormal eigenvectors
    Eigen::VectorXd energies;  // eigenvalues of H
    int branch_cut_hits = 0;

    Eigen::MatrixXcd evolution(double t) const;
};

Hamiltonian hamiltonian_from_matrix(const Eigen::MatrixXcd &h, double epsilon);
/// H = (i/epsilon) log S. Permutations use exact cycle eigenvectors, dense input a Schur form.
Hamiltonian hamiltonian_from_step(const StepOperator &s, double epsilon, std::uint64_t max_dim = kDefaultDenseCap);

Eigen::VectorXcd schrodinger_evolve(const Hamiltonian &h, const Eigen::VectorXcd &q, double t);

/// (i/epsilon) log(exp(-i epsilon H_int) exp(-i epsilon H_free)) - H_free - H_int.
Hamiltonian delta_H(const Hamiltonian &h_free, const Hamiltonian &h_int, double epsilon);

/// Eigenphases of the one-particle block of the free step for one species, ascending.
std::vector<double> free_spectrum(const LatticeSpec &spec, Species species);
/// Closed form: -2 pi k / M_x for right movers, +2 pi k / M_x for left movers, principal branch.
double free_phase(const LatticeSpec &spec, Species species, int k);

/// Max-norm of [S, T] with T the one-site translation, by exhaustive permutation composition.
double translation_commutator(const LatticeSpec &spec, std::uint64_t max_dim = kDefaultPermutationCap);

}  // namespace fermicell
