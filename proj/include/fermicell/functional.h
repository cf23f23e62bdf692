#pragma once

// Basis functions, local factors and step-operator extraction for the
// Grassmann functional integral of the automaton.
//
// Slice layout: a factor linking k time slices uses k*M generators with
// M = 4 M_x. Slice 0 is the latest time, slice k-1 the earliest. Inside a
// slice generator 4x+gamma is psi_gamma(x), mirroring the bit map of the
// configuration index.

#include <cstdint>
#include <string>
#include <vector>

#include "fermicell/exact_matrix.h"
#include "fermicell/grassmann.h"
#include "fermicell/lattice.h"

namespace fermicell {

/// Which occupation value a psi factor marks. With Hole, g_tau carries psi_alpha
/// exactly when n_alpha = 0, so g_(1001) = psi_2 psi_3.
enum class Occupancy { Hole, Particle };

enum class BasisVariant { G, GPrime, GBar, GBarPrime };

int epsilon_sign(int m);
int eta_sign(int slice_size);
int epsilon_prime_sign(int m, int slice_size);

struct BasisConvention {
    Occupancy occupancy = Occupancy::Hole;
    std::vector<std::int8_t> signs;  // s~_tau; empty means all +1

    int sign(std::uint64_t tau) const { return signs.empty() ? 1 : signs[tau]; }
};

/// Monomial (over one slice) of the given basis function.
Mask basis_mask(std::uint64_t tau, int slice_size, BasisVariant v, Occupancy occ);
/// Number of psi factors in g_tau.
int basis_degree(std::uint64_t tau, int slice_size, Occupancy occ);
/// The +-1 coefficient in front of the basis monomial.
int basis_coefficient(std::uint64_t tau, int slice_size, BasisVariant v, const BasisConvention &conv);
/// Basis function placed in an algebra of `generators` generators starting at `offset`.
GrassmannElement basis_function(std::uint64_t tau, int slice_size, BasisVariant v,
                                const BasisConvention &conv = {}, int generators = -1, int offset = 0);

/// The pair of basis variants in K = sum L_tau(later) S_tau,rho R_rho(earlier).
/// exp(sum_a psi_a phi_a) over 2M generators, psi in slice 0 and phi in slice 1.
GrassmannElement identity_kernel(int slice_size);
/// sum_tau g_tau(psi) g'_tau(phi) in the same layout as identity_kernel.
GrassmannElement odd_identity_expansion(int slice_size, const BasisConvention &conv = {});

enum class Pairing {
    BarG,           // int D psi gbar_tau g_rho, expected delta
    PrimeBarPrime,  // int D psi g'_tau gbar'_rho, expected eta_M delta
};

struct PairingReport {
    int pairs = 0;
    int mismatches = 0;
    bool ok() const { return mismatches == 0; }
};

/// Checks the pairing for every (tau, rho) on a slice of `slice_size` generators.
PairingReport basis_pairing(int slice_size, Pairing which, const BasisConvention &conv = {});

struct ExpansionForm {
    BasisVariant left;
    BasisVariant right;
    friend bool operator==(ExpansionForm, ExpansionForm) = default;
};

inline constexpr ExpansionForm kOddForm{BasisVariant::G, BasisVariant::GPrime};
inline constexpr ExpansionForm kEvenForm{BasisVariant::GBarPrime, BasisVariant::GBar};
inline constexpr ExpansionForm kMixedForm{BasisVariant::G, BasisVariant::GBar};
inline constexpr ExpansionForm kChainForm{BasisVariant::GBarPrime, BasisVariant::GPrime};

std::string form_name(ExpansionForm f);

enum class FactorKind {
    Identity,         // exp(psi'_b psi_b)
    TransportR,       // every species moves one site right
    TransportL,       // every species moves one site left
    Free,             // right movers right, left movers left
    Interaction,      // prod_x (exp(psi'psi) - Dbar)
    ScatterOnly,      // prod_x (exp(psi'psi) - Dtilde), first channel only
    InteractionExp,   // prod_x exp(-(-psi'psi + Dbar)(1 + Dbar))
    Combined,         // interaction after free, three slices
    Product,          // product of two factors over three slices
    Chain,            // result of integrating the shared slice of a product
};

std::string factor_kind_name(FactorKind k);

struct LocalFactor {
    GrassmannElement element;
    FactorKind kind = FactorKind::Identity;
    int sites = 1;
    int slices = 2;
    ExpansionForm form = kOddForm;  // of the two-slice factor, or of the integrated product
    double t_tilde = 0.5;           // time between adjacent slices in units of epsilon
    std::vector<std::string> names;

    int slice_size() const { return kSpeciesCount * sites; }
};

/// Generator names for a factor; slice 0 is primed once per later slice ("psi''", "psi'", "psi").
std::vector<std::string> slice_names(int sites, int slices);

/// Dtilde, Ctilde and Dbar at site x, between slice `later` and slice `earlier`.
GrassmannElement d_tilde(int sites, int slices, int later, int earlier, int x);
GrassmannElement c_tilde(int sites, int slices, int later, int earlier, int x);
GrassmannElement d_bar(int sites, int slices, int later, int earlier, int x);

LocalFactor local_factor(FactorKind kind, const LatticeSpec &spec);

/// Default extraction form of each kind: free transport even, interaction odd.
ExpansionForm natural_form(FactorKind kind);

/// K2 (later) times K1 (earlier) over three slices, without integration.
LocalFactor product(const LocalFactor &k2, const LocalFactor &k1);
/// Integrates the middle slice of a three-slice factor.
LocalFactor integrate_middle(const LocalFactor &k);

/// Reads S from the coefficients of a two-slice factor (three-slice factors are integrated first).
/// Throws when a term cannot belong to the bilinear basis form.
ExactMatrix extract_step_operator(const LocalFactor &k, const BasisConvention &conv = {});
ExactMatrix extract_step_operator(const LocalFactor &k, ExpansionForm form, const BasisConvention &conv);
/// Same matrix by Berezin projection with the dual basis functions.
ExactMatrix extract_by_projection(const LocalFactor &k, const BasisConvention &conv = {});

struct ChainRuleReport {
    bool ok = false;
    ExactMatrix integrated;  // extracted from the integrated product
    ExactMatrix product;     // S(K2) S(K1)
};

ChainRuleReport verify_chain_rule(const LocalFactor &k2, const LocalFactor &k1, const BasisConvention &conv = {});

/// tr{S(K_last) ... S(K_first) B}; `chain` is ordered earliest first.
Rational partition_function(const std::vector<LocalFactor> &chain, const ExactMatrix &boundary,
                            const BasisConvention &conv = {});

struct SignFixResult {
    bool ok = false;
    std::vector<std::int8_t> signs;                            // F, with F S F the fixed matrix
    std::vector<std::vector<std::uint64_t>> obstructed_cycles;  // cycles whose sign product is -1
    ExactMatrix fixed;
};

/// Chooses basis signs cycle by cycle so that every entry of F S F becomes +1.
SignFixResult fix_signs(const ExactMatrix &s);

/// Sign table obtained by fixing the combined automaton factor of the lattice.
SignFixResult canonical_sign_table(const LatticeSpec &spec);

/// Renames the intermediate slice of a three-slice pair to barred variables at the later
/// coarse time: psi(t + eps/2) -> psibar(t + eps). The algebra itself is untouched.
LocalFactor coarse_grain_relabel(const LocalFactor &pair);

/// Name of the coarse variable playing the role of psi'_gamma (later) or psi_gamma in Dbar.
std::string coarse_name(int gamma, bool primed);

struct ThirringReport {
    bool interaction_matches = false;  // -[current-current terms] == 2 Dbar
    bool literal_matches = false;      // -[current-current terms] == -2 Dbar
    bool kinetic_matches = false;
    GrassmannElement interaction;      // -(1/2 J J + 1/2 eps J eps J)
    GrassmannElement two_d_bar;
    GrassmannElement residue;          // interaction - 2 Dbar
    std::vector<std::string> names;
};

ThirringReport verify_thirring_form();

struct GammaReport {
    bool anticommutator = false;  // {g^mu, g^nu} = 2 eta^{mu nu}
    bool g0_squared = false;      // (g^0)^2 = -1
    bool g1_squared = false;      // (g^1)^2 = +1
    bool gamma_bar = false;       // -g^0 g^1 = tau_3
    bool ok() const { return anticommutator && g0_squared && g1_squared && gamma_bar; }
};

GammaReport verify_gamma_matrices();

}  // namespace fermicell
