#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fermicell/fock.h"

using namespace fermicell;

namespace {

SparseComplex identity(std::size_t n) {
    SparseComplex id(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    id.setIdentity();
    return id;
}

SparseComplex charge_operator(const Basis &b, Charge q) {
    SparseComplex m(static_cast<Eigen::Index>(b.size()), static_cast<Eigen::Index>(b.size()));
    std::vector<Eigen::Triplet<cplx>> t;
    for (std::size_t i = 0; i < b.size(); ++i) {
        t.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), charge(b.state(i), q));
    }
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

}  // namespace

TEST(Ladder, AnnihilatorKillsVacuum) {
    const Basis b = Basis::full(LatticeSpec(1), 16);
    const SparseComplex a = annihilator(b, 0, 2).matrix;
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(16);
    vac(0) = 1;
    EXPECT_EQ((a * vac).norm(), 0);
}

TEST(Ladder, JordanWignerSign) {
    // a_{L1}(0) on |R1 L1> passes one occupied lower bit.
    BitConfig c(1);
    c.set(0, true);
    c.set(2, true);
    const auto r = apply_ladder(c, {{2, false}});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->second, -1);
    EXPECT_FALSE(apply_ladder(c, {{1, false}}).has_value());
}

TEST(Ladder, CanonicalAnticommutatorsAtTwoSites) {
    const Basis b = Basis::full(LatticeSpec(2), 256);
    const SparseComplex id = identity(b.size());
    std::vector<SparseComplex> a, ad;
    for (int x = 0; x < 2; ++x) {
        for (int g = 0; g < 4; ++g) {
            a.push_back(annihilator(b, x, g).matrix);
            ad.push_back(creator(b, x, g).matrix);
        }
    }
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_EQ(max_abs(anticommutator(a[i], a[j])), 0);
            EXPECT_EQ(max_abs(anticommutator(ad[i], ad[j])), 0);
            const SparseComplex expected = i == j ? id : SparseComplex(id * 0.0);
            EXPECT_EQ(max_abs(SparseComplex(anticommutator(ad[i], a[j]) - expected)), 0);
        }
    }
}

TEST(Ladder, FullBasisRequired) {
    const Basis s = Basis::sector(LatticeSpec(2), ChargeSector{1, 1, std::nullopt});
    EXPECT_THROW(annihilator(s, 0, 0), std::invalid_argument);
}

TEST(SInt, ExponentIsAntiHermitianAndResultUnitary) {
    const Basis local = Basis::full(LatticeSpec(1), 16);
    const Eigen::MatrixXcd q = Eigen::MatrixXcd(term_matrix(local, scatter_generator_terms(0)));
    EXPECT_LT(hermiticity_defect(q), 1e-15);
    EXPECT_LT(unitarity_defect(site_interaction_exponential()), 1e-14);
}

TEST(SInt, BosonicPairIsUntouched) {
    const Eigen::MatrixXcd e = site_interaction_exponential();
    for (int v : {0, 1, 3, 12, 13, 15}) {
        EXPECT_NEAR(std::abs(e(v, v) - 1.0), 0, 1e-14) << v;
    }
}

TEST(SInt, OneSiteEqualsScatterPermutation) {
    const Basis b = Basis::full(LatticeSpec(1), 16);
    const double diff = max_abs(build_S_int_fock(b).to_dense() - build_step_operator(b, StepFactor::Int).to_dense());
    EXPECT_LT(diff, 1e-12);
}

TEST(SInt, ModulusMatchesScatterPermutation) {
    // Entry magnitudes agree even where the phases do not.
    const Basis b = Basis::full(LatticeSpec(2), 256);
    const Eigen::MatrixXcd f = build_S_int_fock(b).to_dense();
    const Eigen::MatrixXcd p = build_step_operator(b, StepFactor::Int).to_dense();
    EXPECT_LT((f.cwiseAbs() - p.cwiseAbs()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SInt, TwoSitesEqualsScatterPermutation) {
    const Basis b = Basis::full(LatticeSpec(2), 256);
    const double diff = max_abs(build_S_int_fock(b).to_dense() - build_step_operator(b, StepFactor::Int).to_dense());
    EXPECT_LT(diff, 1e-12);
}

TEST(SInt, BudgetEnforced) {
    EXPECT_THROW(build_S_int_fock(Basis::full(LatticeSpec(4), 1u << 16)), BudgetExceeded);
}

TEST(SFree, TwoSiteSpeciesSwapsSingles) {
    const ExactMatrix s = build_S_free_species(2, Mover::R);
    EXPECT_EQ(s.get(0, 0), 1);
    EXPECT_EQ(s.get(2, 1), 1);
    EXPECT_EQ(s.get(1, 2), 1);
    EXPECT_EQ(s.get(1, 1), 0);
    EXPECT_EQ(s.get(2, 2), 0);
}

TEST(SFree, TwoSiteSpeciesFullStateSignPlusOne) { EXPECT_EQ(build_S_free_species(2, Mover::R).get(3, 3), 1); }

TEST(SFree, SpeciesOperatorsAreSignedPermutations) {
    for (int m = 1; m <= 4; ++m) {
        EXPECT_TRUE(build_S_free_species(m, Mover::R).is_signed_permutation());
        EXPECT_TRUE(build_S_free_species(m, Mover::L).is_signed_permutation());
    }
}

TEST(SFree, OneSiteIsIdentity) {
    const Basis b = Basis::full(LatticeSpec(1), 16);
    EXPECT_EQ(max_abs(build_S_free_fock(b).to_dense() - Eigen::MatrixXcd::Identity(16, 16)), 0);
}

TEST(SFree, TwoSitesEqualsShift) {
    const Basis b = Basis::full(LatticeSpec(2), 256);
    EXPECT_EQ(max_abs(build_S_free_fock(b).to_dense() - build_step_operator(b, StepFactor::Free).to_dense()), 0);
}

TEST(SFree, SingleParticleSectorEqualsShift) {
    // With one fermion there is no exchange sign.
    const Basis b = Basis::sector(LatticeSpec(3), ChargeSector{1, 0, std::nullopt});
    const StepOperator f = build_S_free_fock(Basis::full(LatticeSpec(3), 4096));
    const StepOperator ref = build_step_operator(LatticeSpec(3), StepFactor::Free);
    for (const auto &c : b.states()) {
        const auto tau = c.index();
        EXPECT_EQ(f.perm().target[tau], ref.perm().target[tau]);
        EXPECT_EQ(f.perm().sign[tau], 1);
    }
}

TEST(HLattice, FreeSingleParticleDispersion) {
    for (int m : {3, 4, 5, 8}) {
        const double eps = 0.5;
        const Basis b = Basis::sector(LatticeSpec(m, eps), ChargeSector{1, 0, std::nullopt});
        const LatticeHamiltonian h = build_H_lattice(b, eps);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(h.free)};
        std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
        std::vector<double> expected;
        for (int color = 0; color < 2; ++color) {
            for (int k = 0; k < m; ++k) {
                expected.push_back(std::sin(2 * std::numbers::pi * k / m) / eps);
            }
        }
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_NEAR(got[i], expected[i], 1e-12);
        }
    }
}

TEST(HLattice, InteractionNeedsTwoParticles) {
    const LatticeSpec spec(3);
    for (ChargeSector s : {ChargeSector{0, 0, {}}, ChargeSector{1, 0, {}}, ChargeSector{0, 1, {}}}) {
        EXPECT_EQ(max_abs(build_H_lattice(Basis::sector(spec, s)).interaction), 0);
    }
}

TEST(HLattice, InteractionConnectsOnlyScatterPairs) {
    const Basis b = Basis::full(LatticeSpec(2), 256);
    const SparseComplex h = build_H_lattice(b).interaction;
    for (int k = 0; k < h.outerSize(); ++k) {
        for (SparseComplex::InnerIterator it(h, k); it; ++it) {
            if (std::abs(it.value()) == 0) continue;
            ASSERT_NE(it.row(), it.col());
            int changed = 0;
            for (int x = 0; x < 2; ++x) {
                const int u = local_nibble(b.state(static_cast<std::size_t>(it.row())), x).value;
                const int v = local_nibble(b.state(static_cast<std::size_t>(it.col())), x).value;
                if (u != v) {
                    ++changed;
                    EXPECT_EQ(u + v, 15);
                    EXPECT_TRUE(u == 5 || u == 6 || u == 9 || u == 10);
                }
            }
            EXPECT_EQ(changed, 1);
        }
    }
}

TEST(HLattice, CommutesWithCharges) {
    for (int m : {1, 2}) {
        const Basis b = Basis::full(LatticeSpec(m), 256);
        const LatticeHamiltonian h = build_H_lattice(b);
        for (Charge q : {Charge::Right, Charge::Left, Charge::Color1Parity, Charge::Total}) {
            const SparseComplex n = charge_operator(b, q);
            EXPECT_LT(max_abs(commutator(h.free, n)), 1e-12);
            EXPECT_LT(max_abs(commutator(h.interaction, n)), 1e-12);
        }
    }
    const Basis b3 = Basis::sector(LatticeSpec(3), ChargeSector{2, 1, std::nullopt});
    const LatticeHamiltonian h3 = build_H_lattice(b3);
    const SparseComplex p = charge_operator(b3, Charge::Color1Parity);
    EXPECT_LT(max_abs(commutator(h3.total(), p)), 1e-12);
}

TEST(Trotter, ZeroStepsZeroDistance) {
    const Basis b = Basis::sector(LatticeSpec(8), ChargeSector{1, 1, 1});
    const auto q0 = gaussian_pair(b, kR1, 2, kL2, 6, 1.5);
    const TrotterReport r = trotter_compare(b, q0, 0);
    EXPECT_EQ(r.automaton_vs_alternating, 0);
    EXPECT_EQ(r.automaton_vs_continuum, 0);
    EXPECT_EQ(r.alternating_vs_continuum, 0);
}

TEST(Trotter, UpwindSingleParticleIsExact) {
    // H taken from the logarithm of the exact transport operator reproduces it at every step.
    const LatticeSpec spec(12);
    const Basis b = Basis::sector(spec, ChargeSector{1, 0, std::nullopt});
    const StepOperator s = build_step_operator(b, StepFactor::Free);
    const Hamiltonian h = hamiltonian_from_step(s, 1.0);
    const Eigen::VectorXcd q0 = gaussian_single(b, kR1, 3, 2);
    Eigen::VectorXcd q = q0;
    for (int n = 1; n <= 10; ++n) {
        q = apply_step(s, q);
        EXPECT_LT((schrodinger_evolve(h, q0, n) - q).norm(), 1e-10);
    }
}

TEST(Trotter, SymmetricDerivativeHasDispersionError) {
    const LatticeSpec spec(16);
    const Basis b = Basis::sector(spec, ChargeSector{1, 0, std::nullopt});
    const StepOperator s = build_step_operator(b, StepFactor::Full);
    const LatticeHamiltonian h = build_H_lattice(b);
    const Eigen::VectorXcd q0 = gaussian_single(b, kR1, 4, 2);
    Eigen::VectorXcd q = q0;
    for (int n = 0; n < 6; ++n) {
        q = apply_step(s, q);
    }
    EXPECT_GT((expm_multiply(h.free, q0, 6) - q).norm(), 1e-3);
}

TEST(Trotter, WidthScanMonotone) {
    const TrotterScan scan = trotter_width_scan(32, 16, {2, 4, 8});
    ASSERT_EQ(scan.reports.size(), 3u);
    EXPECT_TRUE(scan.monotone);
}

TEST(Export, TripletsFormat) {
    const Basis b = Basis::full(LatticeSpec(1), 16);
    const std::string t = to_triplets(creator(b, 0, 0).matrix);
    EXPECT_EQ(t.substr(0, t.find('\n')), "1 0 1 0");
}
