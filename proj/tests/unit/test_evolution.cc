#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fermicell/evolution.h"
#include "fermicell/rng.h"

using namespace fermicell;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd dense_probabilities(const Ensemble &e) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(e.spec().num_configs()));
    for (const auto &[c, w] : e.weights()) {
        p(static_cast<Eigen::Index>(c.index())) = w;
    }
    return p;
}

}  // namespace

TEST(WaveFunction, DeltaFromPointMass) {
    const LatticeSpec spec(2);
    const BitConfig c = BitConfig::from_index(37, spec);
    const WaveFunction q = wavefunction_from_ensemble(Ensemble::point_mass(c, spec));
    EXPECT_EQ(q.q(37), 1.0);
    EXPECT_EQ(q.q.sum(), 1.0);
    EXPECT_EQ(delta_wavefunction(c).q, q.q);
}

TEST(WaveFunction, TwoPointHalfHalf) {
    const LatticeSpec spec(1);
    const WaveFunction q = wavefunction_from_ensemble(
        Ensemble(spec, {{BitConfig::from_index(1, spec), 0.5}, {BitConfig::from_index(2, spec), 0.5}}));
    EXPECT_DOUBLE_EQ(q.q(1), 1 / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(q.q(2), 1 / std::sqrt(2.0));
}

TEST(WaveFunction, ProbabilitiesRoundTrip) {
    Xoshiro256 rng(1);
    const Ensemble e = random_ensemble(LatticeSpec(2), 30, rng);
    const Ensemble back = probabilities(wavefunction_from_ensemble(e));
    ASSERT_EQ(back.support_size(), e.support_size());
    for (const auto &[c, p] : e.weights()) {
        EXPECT_NEAR(back.probability(c), p, 1e-15);
    }
}

TEST(StepOperator, SiteInteractionPermutation) {
    const StepOperator s = build_step_operator(LatticeSpec(1), StepFactor::Int);
    ASSERT_TRUE(s.is_permutation());
    for (std::uint64_t v = 0; v < 16; ++v) {
        std::uint64_t expected = v;
        if (v == 9 || v == 6) expected = 15 - v;
        if (v == 5 || v == 10) expected = 15 - v;
        EXPECT_EQ(s.perm().target[v], expected);
        EXPECT_EQ(s.perm().sign[v], 1);
    }
    EXPECT_EQ(build_site_operator().perm().target, s.perm().target);
}

TEST(StepOperator, FreeIsCyclicShift) {
    const LatticeSpec spec(2);
    const StepOperator s = build_step_operator(spec, StepFactor::Free);
    for (std::uint64_t tau = 0; tau < spec.num_configs(); ++tau) {
        EXPECT_EQ(s.perm().target[tau], free_step(BitConfig::from_index(tau, spec)).index());
    }
}

TEST(StepOperator, FullIsIntAfterFree) {
    for (int sites : {1, 2, 3}) {
        const LatticeSpec spec(sites);
        const StepOperator full = build_step_operator(spec, StepFactor::Full);
        const StepOperator composed =
            compose(build_step_operator(spec, StepFactor::Int), build_step_operator(spec, StepFactor::Free));
        EXPECT_EQ(full.perm().target, composed.perm().target);
    }
}

TEST(StepOperator, UniqueJumpAndOrthogonal) {
    for (int sites : {1, 2, 3}) {
        for (StepFactor f : {StepFactor::Full, StepFactor::Free, StepFactor::Int}) {
            const StepOperator s = build_step_operator(LatticeSpec(sites), f);
            EXPECT_TRUE(s.is_unique_jump());
            if (sites <= 2) {
                const Eigen::MatrixXd d = s.to_dense_real();
                EXPECT_TRUE((d.transpose() * d).isIdentity(0));
                EXPECT_EQ(d.cwiseAbs().sum(), static_cast<double>(s.dim()));
            }
        }
    }
}

TEST(StepOperator, SectorRestrictionMatchesFull) {
    const LatticeSpec spec(3);
    const Basis basis = Basis::sector(spec, ChargeSector{2, 1, 1});
    const StepOperator sector = build_step_operator(basis, StepFactor::Full);
    const StepOperator full = build_step_operator(spec, StepFactor::Full);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto img = sector.perm().target[i];
        EXPECT_EQ(basis.state(img).index(), full.perm().target[basis.state(i).index()]);
    }
}

TEST(StepOperator, BudgetEnforced) {
    EXPECT_THROW(build_step_operator(LatticeSpec(5), StepFactor::Full, 1u << 16), BudgetExceeded);
    EXPECT_THROW(StepOperator::permutation(PermutationForm{{0, 0}, {1, 1}}, StepFactor::Full), std::invalid_argument);
}

TEST(ApplyStep, DeltaGoesToImage) {
    const LatticeSpec spec(3);
    const StepOperator s = build_step_operator(spec, StepFactor::Full);
    const BitConfig c = BitConfig::from_index(1234, spec);
    const WaveFunction q = apply_step(s, delta_wavefunction(c));
    EXPECT_EQ(q.q(static_cast<Eigen::Index>(automaton_step(c).index())), 1.0);
    EXPECT_EQ(q.t, 1.0);
}

TEST(ApplyStep, CommutesWithEnsembleStep) {
    const LatticeSpec spec(3);
    const StepOperator s = build_step_operator(spec, StepFactor::Full);
    Xoshiro256 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        Ensemble e = random_ensemble(spec, 100, rng);
        WaveFunction q = wavefunction_from_ensemble(e);
        for (int m = 0; m < 100; ++m) {
            e = ensemble_step(e);
            q = apply_step(s, q);
            ASSERT_LT((q.q.cwiseAbs2() - dense_probabilities(e)).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(ApplyStep, NormPreservedOverThousandSteps) {
    const LatticeSpec spec(2);
    const StepOperator s = build_step_operator(spec, StepFactor::Full);
    Xoshiro256 rng(5);
    WaveFunction q = wavefunction_from_ensemble(random_ensemble(spec, 50, rng));
    for (int m = 0; m < 1000; ++m) {
        q = apply_step(s, q);
    }
    EXPECT_LT(q.norm_defect(), 1e-12);
}

TEST(Hamiltonian, IdentityGivesZero) {
    PermutationForm p{{0, 1, 2, 3}, {1, 1, 1, 1}};
    const Hamiltonian h = hamiltonian_from_step(StepOperator::permutation(p, StepFactor::Full), 1.0);
    EXPECT_LT(h.matrix.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Hamiltonian, SiteOperatorSpectrum) {
    const Hamiltonian h = hamiltonian_from_step(build_site_operator(), 1.0);
    int zeros = 0;
    int at_pi = 0;
    for (Eigen::Index i = 0; i < h.energies.size(); ++i) {
        if (std::abs(h.energies(i)) < 1e-12) ++zeros;
        // S eigenphase pi sits on the principal branch cut and is taken as +pi, so eps H = -pi.
        if (std::abs(h.energies(i) + kPi) < 1e-12) ++at_pi;
    }
    EXPECT_EQ(zeros, 14);
    EXPECT_EQ(at_pi, 2);
    EXPECT_EQ(h.branch_cut_hits, 2);
}

TEST(Hamiltonian, RoundTripAndHermitian) {
    const StepOperator s = build_step_operator(LatticeSpec(2), StepFactor::Full);
    const Hamiltonian h = hamiltonian_from_step(s, 1.0);
    EXPECT_LT(max_abs(h.evolution(1.0) - s.to_dense()), 1e-10);
    EXPECT_LT(hermiticity_defect(h.matrix), 1e-12);
    const Hamiltonian h2 = hamiltonian_from_step(s, 0.5);
    EXPECT_LT(max_abs(h2.evolution(0.5) - s.to_dense()), 1e-10);
}

TEST(Hamiltonian, DenseRouteAgreesWithCycleRoute) {
    const StepOperator s = build_step_operator(LatticeSpec(1), StepFactor::Full);
    const StepOperator d = StepOperator::dense(s.to_dense(), StepFactor::Full);
    const Hamiltonian a = hamiltonian_from_step(s, 1.0);
    const Hamiltonian b = hamiltonian_from_step(d, 1.0);
    EXPECT_LT(max_abs(a.evolution(1.0) - b.evolution(1.0)), 1e-10);
    EXPECT_LT(max_abs(a.matrix - b.matrix), 1e-9);
}

TEST(Hamiltonian, BudgetEnforced) {
    const StepOperator s = build_step_operator(LatticeSpec(3), StepFactor::Full);
    EXPECT_THROW(hamiltonian_from_step(s, 1.0, 1024), BudgetExceeded);
}

TEST(Schrodinger, MatchesAutomatonAtIntegerTimes) {
    const LatticeSpec spec(2);
    const StepOperator s = build_step_operator(spec, StepFactor::Full);
    const Hamiltonian h = hamiltonian_from_step(s, 1.0);
    Xoshiro256 rng(3);
    WaveFunction q = wavefunction_from_ensemble(random_ensemble(spec, 20, rng));
    const Eigen::VectorXcd q0 = q.q.cast<cplx>();
    EXPECT_LT((schrodinger_evolve(h, q0, 0) - q0).cwiseAbs().maxCoeff(), 1e-14);
    for (int m = 1; m <= 20; ++m) {
        q = apply_step(s, q);
        EXPECT_LT((schrodinger_evolve(h, q0, m) - q.q.cast<cplx>()).cwiseAbs().maxCoeff(), 1e-9);
    }
    const Eigen::VectorXcd half = schrodinger_evolve(h, schrodinger_evolve(h, q0, 0.5), 0.5);
    EXPECT_LT((half - schrodinger_evolve(h, q0, 1.0)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DeltaH, CommutingPiecesGiveZero) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 3);
    a.diagonal() << 0.3, -0.2, 0.1;
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(3, 3);
    b.diagonal() << 0.05, 0.4, -0.7;
    const Hamiltonian dh = delta_H(hamiltonian_from_matrix(a, 1), hamiltonian_from_matrix(b, 1), 1.0);
    EXPECT_LT(dh.matrix.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DeltaH, LeadingCommutatorTerm) {
    Xoshiro256 rng(10);
    auto random_hermitian = [&](int n) {
        Eigen::MatrixXcd m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m(i, j) = cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
            }
        }
        return Eigen::MatrixXcd(0.5 * (m + m.adjoint()));
    };
    const Eigen::MatrixXcd hf = random_hermitian(6);
    const Eigen::MatrixXcd hi = random_hermitian(6);
    const Eigen::MatrixXcd comm = hi * hf - hf * hi;
    double prev = 0;
    for (double lambda : {0.2, 0.1, 0.05}) {
        const Hamiltonian dh = delta_H(hamiltonian_from_matrix(hf, 1), hamiltonian_from_matrix(hi, 1), lambda);
        EXPECT_LT(hermiticity_defect(dh.matrix), 1e-10);
        const double err = max_abs(dh.matrix - cplx(0, -lambda / 2) * comm);
        if (prev > 0) {
            EXPECT_GT(prev / err, 3.0);
        }
        prev = err;
    }
}

TEST(FreeSpectrum, Examples) {
    auto r = free_spectrum(LatticeSpec(2), kR1);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r[0], 0, 1e-12);
    EXPECT_NEAR(r[1], kPi, 1e-12);
    auto l = free_spectrum(LatticeSpec(4), kL1);
    const std::vector<double> expected{-kPi / 2, 0, kPi / 2, kPi};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(l[i], expected[i], 1e-12);
    }
}

TEST(FreeSpectrum, DeterminantAndLinearDispersion) {
    for (int m = 1; m <= 9; ++m) {
        const LatticeSpec spec(m);
        for (int g = 0; g < 4; ++g) {
            const Species s = Species::from_index(g);
            double sum = 0;
            for (double p : free_spectrum(spec, s)) {
                sum += p;
            }
            // Product of eigenvalues exp(i sum) equals (-1)^(M_x - 1).
            EXPECT_NEAR(std::cos(sum), (m % 2 == 1) ? 1.0 : -1.0, 1e-10);
            for (int k = 0; k < m; ++k) {
                const double velocity_sign = s.mover == Mover::R ? -1.0 : 1.0;
                EXPECT_NEAR(free_phase(spec, s, k), principal_phase(velocity_sign * 2 * kPi * k / m), 1e-12);
            }
        }
    }
}

TEST(Translation, CommutesWithStep) {
    EXPECT_EQ(translation_commutator(LatticeSpec(2)), 0);
    EXPECT_EQ(translation_commutator(LatticeSpec(3)), 0);
}

TEST(Linalg, PrincipalPhaseBranch) {
    EXPECT_DOUBLE_EQ(principal_phase(-kPi), kPi);
    EXPECT_DOUBLE_EQ(principal_phase(3 * kPi), kPi);
    EXPECT_NEAR(principal_phase(2 * kPi + 0.1), 0.1, 1e-12);
}
