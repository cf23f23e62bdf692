#include "fermicell/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fermicell/fock.h"
#include "fermicell/functional.h"
#include "fermicell/rng.h"

namespace fermicell {

namespace {

std::string num(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

CheckResult result(bool ok, std::string detail) { return CheckResult{"", ok, std::move(detail), 0}; }

std::vector<BitConfig> sample_configs(const LatticeSpec &spec, std::uint64_t seed, int exhaustive_sites,
                                      std::size_t samples) {
    std::vector<BitConfig> out;
    if (spec.sites() <= exhaustive_sites) {
        for (std::uint64_t tau = 0; tau < spec.num_configs(); ++tau) {
            out.push_back(BitConfig::from_index(tau, spec));
        }
        return out;
    }
    Xoshiro256 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        out.push_back(random_config(spec, rng));
    }
    return out;
}

ExactMatrix exact(const StepOperator &s) { return ExactMatrix::from_permutation(s.perm().target, s.perm().sign); }

// ---- lattice ----

CheckResult lattice_index_roundtrip(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 3));
    for (std::uint64_t tau = 0; tau < spec.num_configs(); ++tau) {
        if (index_of(config_from_index(tau, spec)) != tau) {
            return result(false, "tau=" + std::to_string(tau));
        }
    }
    return result(true, "M_x=" + std::to_string(spec.sites()) + " exhaustive");
}

CheckResult lattice_nibbles(const VerifyContext &ctx) {
    const LatticeSpec spec(ctx.sites);
    for (const auto &c : sample_configs(spec, ctx.seed, 3, 2000)) {
        BitConfig rebuilt(spec.sites());
        for (int x = 0; x < spec.sites(); ++x) {
            set_nibble(rebuilt, x, local_nibble(c, x));
        }
        if (rebuilt != c) {
            return result(false, c.to_bit_string());
        }
    }
    return result(true, "M_x=" + std::to_string(spec.sites()));
}

CheckResult lattice_charge_sum(const VerifyContext &ctx) {
    const LatticeSpec spec(ctx.sites);
    for (const auto &c : sample_configs(spec, ctx.seed, 3, 2000)) {
        if (charge(c, Charge::Total) != charge(c, Charge::Right) + charge(c, Charge::Left)) {
            return result(false, c.to_bit_string());
        }
    }
    return result(true, "M_x=" + std::to_string(spec.sites()));
}

// ---- automaton ----

CheckResult automaton_bijection(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 3));
    std::vector<bool> hit(spec.num_configs(), false);
    for (std::uint64_t tau = 0; tau < spec.num_configs(); ++tau) {
        const auto img = automaton_step(BitConfig::from_index(tau, spec)).index();
        if (hit[img]) {
            return result(false, "collision at " + std::to_string(img));
        }
        hit[img] = true;
    }
    return result(true, "M_x=" + std::to_string(spec.sites()) + " exhaustive");
}

CheckResult automaton_involution(const VerifyContext &ctx) {
    const LatticeSpec spec(ctx.sites);
    for (const auto &c : sample_configs(spec, ctx.seed, 3, 2000)) {
        if (interaction_step(interaction_step(c)) != c) {
            return result(false, c.to_bit_string());
        }
    }
    return result(true, "M_x=" + std::to_string(spec.sites()));
}

CheckResult automaton_conservation(const VerifyContext &ctx) {
    const LatticeSpec spec(ctx.sites);
    const Charge charges[] = {Charge::Total, Charge::Right, Charge::Left, Charge::Color1Parity};
    const auto configs = sample_configs(spec, ctx.seed, 3, 5000);
    for (const auto &c : configs) {
        const BitConfig next = automaton_step(c);
        for (Charge q : charges) {
            if (charge(next, q) != charge(c, q)) {
                return result(false, c.to_bit_string());
            }
        }
    }
    return result(true, std::to_string(configs.size()) + " configurations at M_x=" + std::to_string(spec.sites()));
}

CheckResult automaton_ensemble(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 16));
    Xoshiro256 rng(ctx.seed);
    for (int trial = 0; trial < 20; ++trial) {
        Ensemble e = random_ensemble(spec, 16, rng);
        Ensemble next = ensemble_step(e);
        std::vector<double> a, b;
        for (const auto &[c, p] : e.weights()) {
            a.push_back(p);
        }
        for (const auto &[c, p] : next.weights()) {
            b.push_back(p);
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            return result(false, "weights not preserved");
        }
        const BitConfig c = random_config(spec, rng);
        Ensemble pm = ensemble_step(Ensemble::point_mass(c, spec));
        if (pm.support_size() != 1 || pm.probability(automaton_step(c)) != 1.0) {
            return result(false, "extreme point not preserved");
        }
    }
    return result(true, "20 random ensembles");
}

CheckResult automaton_translation(const VerifyContext &ctx) {
    const LatticeSpec spec(ctx.sites);
    for (const auto &c : sample_configs(spec, ctx.seed, 3, 2000)) {
        if (automaton_step(translate(c, 1)) != translate(automaton_step(c), 1)) {
            return result(false, c.to_bit_string());
        }
    }
    return result(true, "M_x=" + std::to_string(spec.sites()));
}

CheckResult automaton_scatter_rule(const VerifyContext &ctx) {
    const LatticeSpec spec(ctx.sites);
    Xoshiro256 rng(ctx.seed);
    for (int trial = 0; trial < 50; ++trial) {
        const Trajectory traj = trajectory(random_config(spec, rng), 10);
        std::vector<std::pair<int, int>> predicted;
        for (int t = 1; t <= 10; ++t) {
            const BitConfig moved = free_step(traj.configs[static_cast<std::size_t>(t - 1)]);
            for (int x = 0; x < spec.sites(); ++x) {
                const Nibble n = local_nibble(moved, x);
                if (n.right_count() == 1 && n.left_count() == 1) {
                    predicted.emplace_back(t, x);
                }
            }
        }
        std::vector<std::pair<int, int>> logged;
        for (const auto &ev : traj.events) {
            logged.emplace_back(ev.t, ev.x);
        }
        if (logged != predicted) {
            return result(false, "trial " + std::to_string(trial));
        }
    }
    return result(true, "50 random trajectories of 10 steps");
}

// ---- evolution ----

CheckResult evolution_diagram(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 3));
    const StepOperator s = build_step_operator(spec, StepFactor::Full, ctx.max_dim);
    Xoshiro256 rng(ctx.seed);
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Ensemble e = random_ensemble(spec, std::min<std::uint64_t>(32, spec.num_configs()), rng);
        WaveFunction q = wavefunction_from_ensemble(e);
        for (int m = 1; m <= 100; ++m) {
            e = ensemble_step(e);
            q = apply_step(s, q);
            for (Eigen::Index i = 0; i < q.q.size(); ++i) {
                const double p = e.probability(BitConfig::from_index(static_cast<std::uint64_t>(i), spec));
                worst = std::max(worst, std::abs(q.q(i) * q.q(i) - p));
            }
        }
    }
    return result(worst < ctx.tol.probability, "max deviation " + num(worst));
}

CheckResult evolution_unique_jump(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 3));
    for (StepFactor f : {StepFactor::Full, StepFactor::Free, StepFactor::Int}) {
        const StepOperator s = build_step_operator(spec, f, ctx.max_dim);
        const ExactMatrix e = exact(s);
        if (!s.is_unique_jump() || !(e.transpose() * e == ExactMatrix::identity(e.size()))) {
            return result(false, step_factor_name(f));
        }
    }
    return result(true, "full, free, int at M_x=" + std::to_string(spec.sites()));
}

CheckResult evolution_round_trip(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 2));
    const StepOperator s = build_step_operator(spec, StepFactor::Full, ctx.max_dim);
    const Hamiltonian h = hamiltonian_from_step(s, spec.epsilon(), ctx.max_dim);
    const double err = max_abs(h.evolution(spec.epsilon()) - s.to_dense());
    return result(err < ctx.tol.round_trip, "max |exp(-i eps H) - S| = " + num(err));
}

CheckResult evolution_schrodinger(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 2));
    const StepOperator s = build_step_operator(spec, StepFactor::Full, ctx.max_dim);
    const Hamiltonian h = hamiltonian_from_step(s, spec.epsilon(), ctx.max_dim);
    Xoshiro256 rng(ctx.seed);
    WaveFunction q = wavefunction_from_ensemble(random_ensemble(spec, 16, rng));
    const Eigen::VectorXcd q0 = q.q.cast<cplx>();
    double worst = 0;
    for (int m = 1; m <= 20; ++m) {
        q = apply_step(s, q);
        const Eigen::VectorXcd cont = schrodinger_evolve(h, q0, m * spec.epsilon());
        worst = std::max(worst, (cont - q.q.cast<cplx>()).cwiseAbs().maxCoeff());
    }
    return result(worst < ctx.tol.schrodinger, "max deviation over 20 steps " + num(worst));
}

CheckResult evolution_blocks(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 4));
    const double comm = translation_commutator(spec, ctx.max_dim);
    return result(comm == 0, "||[S, T]|| = " + num(comm));
}

CheckResult evolution_dispersion(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 16));
    const int m = spec.sites();
    double worst = 0;
    for (int g = 0; g < kSpeciesCount; ++g) {
        const Species sp = Species::from_index(g);
        std::vector<double> expected;
        for (int k = 0; k < m; ++k) {
            const double sign = sp.mover == Mover::R ? -1.0 : 1.0;
            expected.push_back(principal_phase(sign * 2 * std::numbers::pi * k / m));
        }
        std::sort(expected.begin(), expected.end());
        const auto numeric = free_spectrum(spec, sp);
        for (int k = 0; k < m; ++k) {
            worst = std::max(worst, std::abs(numeric[static_cast<std::size_t>(k)] - expected[static_cast<std::size_t>(k)]));
        }
    }
    return result(worst < ctx.tol.phase, "max phase error " + num(worst));
}

// ---- fock ----

CheckResult fock_anticommutators(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 2));
    const Basis basis = Basis::full(spec, ctx.max_dim);
    std::vector<SparseComplex> a, ad;
    for (int x = 0; x < spec.sites(); ++x) {
        for (int g = 0; g < kSpeciesCount; ++g) {
            a.push_back(annihilator(basis, x, g).matrix);
            ad.push_back(creator(basis, x, g).matrix);
        }
    }
    SparseComplex id(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
    id.setIdentity();
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            worst = std::max(worst, max_abs(anticommutator(a[i], a[j])));
            worst = std::max(worst, max_abs(anticommutator(ad[i], ad[j])));
            SparseComplex mixed = anticommutator(a[i], ad[j]);
            if (i == j) {
                mixed -= id;
            }
            worst = std::max(worst, max_abs(mixed));
        }
    }
    return result(worst < ctx.tol.anticommutator, "max residual " + num(worst));
}

CheckResult fock_s_int(const VerifyContext &ctx) {
    const Basis basis = Basis::full(LatticeSpec(std::min(ctx.sites, 2)), ctx.max_dim);
    const double err = max_abs(build_S_int_fock(basis).to_dense() - build_step_operator(basis, StepFactor::Int).to_dense());
    return result(err < ctx.tol.operator_match, "max difference " + num(err));
}

CheckResult fock_s_free(const VerifyContext &ctx) {
    const Basis basis = Basis::full(LatticeSpec(std::min(ctx.sites, 2)), ctx.max_dim);
    const double err =
        max_abs(build_S_free_fock(basis).to_dense() - build_step_operator(basis, StepFactor::Free).to_dense());
    return result(err == 0, "max difference " + num(err));
}

CheckResult fock_h_int_local(const VerifyContext &ctx) {
    const Basis basis = Basis::full(LatticeSpec(std::min(ctx.sites, 2)), ctx.max_dim);
    const SparseComplex h = build_H_lattice(basis, basis.spec().epsilon()).interaction;
    for (int k = 0; k < h.outerSize(); ++k) {
        for (SparseComplex::InnerIterator it(h, k); it; ++it) {
            if (it.row() == it.col() || std::abs(it.value()) == 0) {
                continue;
            }
            const BitConfig &r = basis.state(static_cast<std::size_t>(it.row()));
            const BitConfig &c = basis.state(static_cast<std::size_t>(it.col()));
            int changed = 0;
            bool allowed = true;
            for (int x = 0; x < basis.spec().sites(); ++x) {
                const int u = local_nibble(r, x).value;
                const int v = local_nibble(c, x).value;
                if (u != v) {
                    ++changed;
                    allowed = allowed && u + v == 15 && (u == 9 || u == 6 || u == 5 || u == 10);
                }
            }
            if (changed != 1 || !allowed) {
                return result(false, "element " + std::to_string(it.row()) + "," + std::to_string(it.col()));
            }
        }
    }
    return result(true, "off-diagonal elements only swap 9<->6 or 5<->10 at one site");
}

CheckResult fock_alternation(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 2));
    const double eps = spec.epsilon();
    const StepOperator sf = build_step_operator(spec, StepFactor::Free, ctx.max_dim);
    const StepOperator si = build_step_operator(spec, StepFactor::Int, ctx.max_dim);
    const StepOperator s = build_step_operator(spec, StepFactor::Full, ctx.max_dim);
    const Hamiltonian hf = hamiltonian_from_step(sf, eps, ctx.max_dim);
    const Hamiltonian hi = hamiltonian_from_step(si, eps, ctx.max_dim);
    // 2H over each half interval.
    const Eigen::MatrixXcd period = hi.evolution(eps) * hf.evolution(eps);
    const double err = max_abs(period - s.to_dense());
    return result(err < ctx.tol.round_trip, "max difference " + num(err));
}

// ---- grassmann ----

CheckResult grassmann_algebra(const VerifyContext &ctx) {
    const int g = 8;
    for (int a = 0; a < g; ++a) {
        const auto pa = GrassmannElement::generator(g, a);
        if (!(pa * pa).is_zero()) {
            return result(false, "nilpotency at " + std::to_string(a));
        }
        for (int b = 0; b < g; ++b) {
            const auto pb = GrassmannElement::generator(g, b);
            if (!(pa * pb + pb * pa).is_zero()) {
                return result(false, "anticommutation at " + std::to_string(a) + "," + std::to_string(b));
            }
        }
    }
    Xoshiro256 rng(ctx.seed);
    auto random_element = [&]() {
        GrassmannElement e(g);
        for (int i = 0; i < 6; ++i) {
            e += GrassmannElement::monomial(g, rng.below(256), Rational(static_cast<long>(rng.below(7)) - 3));
        }
        return e;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_element(), y = random_element(), z = random_element();
        if (!((x * y) * z == x * (y * z))) {
            return result(false, "associativity");
        }
    }
    return result(true, "exhaustive pairs at G=8, 200 random triples");
}

CheckResult grassmann_identity_expansion(const VerifyContext &) {
    for (int m = 1; m <= 4; ++m) {
        if (!(identity_kernel(m) == odd_identity_expansion(m))) {
            return result(false, "M=" + std::to_string(m));
        }
    }
    return result(true, "M=1..4");
}

CheckResult grassmann_orthonormality(const VerifyContext &) {
    const auto r = basis_pairing(4, Pairing::BarG);
    return result(r.ok(), std::to_string(r.mismatches) + " of " + std::to_string(r.pairs) + " pairs differ");
}

CheckResult grassmann_primed_pairing(const VerifyContext &) {
    const auto r = basis_pairing(4, Pairing::PrimeBarPrime);
    return result(r.ok(), std::to_string(r.mismatches) + " of " + std::to_string(r.pairs) + " pairs differ");
}

CheckResult grassmann_free_extraction(const VerifyContext &ctx) {
    std::string detail;
    bool ok = true;
    for (int sites : {2, 3}) {
        if (sites > std::max(ctx.sites, 2)) {
            break;
        }
        const LatticeSpec spec(sites);
        const ExactMatrix raw = extract_step_operator(local_factor(FactorKind::Free, spec));
        const SignFixResult fixed = fix_signs(raw);
        const bool match = fixed.ok && fixed.fixed == exact(build_step_operator(spec, StepFactor::Free));
        ok = ok && match;
        detail += "M_x=" + std::to_string(sites) + (match ? " equal; " : " obstructed cycles " +
                                                                          std::to_string(fixed.obstructed_cycles.size()) + "; ");
    }
    return result(ok, detail);
}

CheckResult grassmann_combined_extraction(const VerifyContext &ctx) {
    const LatticeSpec spec(std::min(ctx.sites, 2));
    const SignFixResult table = canonical_sign_table(spec);
    BasisConvention conv;
    conv.signs = table.signs;
    const ExactMatrix s = extract_step_operator(local_factor(FactorKind::Combined, spec), conv);
    const bool ok = table.ok && s == exact(build_step_operator(spec, StepFactor::Full));
    return result(ok, "M_x=" + std::to_string(spec.sites()) + ", obstructed cycles " +
                          std::to_string(table.obstructed_cycles.size()));
}

CheckResult grassmann_chain_rule(const VerifyContext &) {
    const LatticeSpec spec(1);
    const LocalFactor f = local_factor(FactorKind::Free, spec);
    const LocalFactor i = local_factor(FactorKind::Interaction, spec);
    // Earliest first: free, interaction, free, interaction.
    const std::vector<const LocalFactor *> chain{&f, &i, &f, &i};
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (!verify_chain_rule(*chain[k + 1], *chain[k]).ok) {
            return result(false, "pair " + std::to_string(k));
        }
    }
    return result(true, "3 adjacent pairs at M_x=1");
}

CheckResult grassmann_thirring(const VerifyContext &) {
    const ThirringReport r = verify_thirring_form();
    const GammaReport g = verify_gamma_matrices();
    const bool ok = r.interaction_matches && r.kinetic_matches && g.ok();
    return result(ok, std::string("interaction ") + (r.interaction_matches ? "equal" : "differs") + ", kinetic " +
                          (r.kinetic_matches ? "equal" : "differs") + ", gamma " + (g.ok() ? "ok" : "fails"));
}

}  // namespace

const std::vector<Suite> &suite_registry() {
    static const std::vector<Suite> suites{
        {"lattice.index_roundtrip", "lattice", "index_of(config_from_index(tau)) = tau", lattice_index_roundtrip},
        {"lattice.nibble_reassembly", "lattice", "local nibbles rebuild the configuration", lattice_nibbles},
        {"lattice.charge_sum", "lattice", "N_total = N_R + N_L", lattice_charge_sum},
        {"automaton.bijection", "automaton", "automaton_step is a bijection", automaton_bijection},
        {"automaton.involution", "automaton", "interaction_step twice is the identity", automaton_involution},
        {"automaton.conservation", "automaton", "N, N_R, N_L and color-1 parity are conserved",
         automaton_conservation},
        {"automaton.ensemble", "automaton", "ensemble_step moves weights and keeps point masses",
         automaton_ensemble},
        {"automaton.translation", "automaton", "stepping commutes with translation", automaton_translation},
        {"automaton.scatter_rule", "automaton", "events exactly where one R meets one L", automaton_scatter_rule},
        {"evolution.diagram", "evolution", "ensemble and squared wave function agree over 100 steps",
         evolution_diagram},
        {"evolution.unique_jump", "evolution", "step operators are unique jump operators", evolution_unique_jump},
        {"evolution.round_trip", "evolution", "exp(-i eps H) reproduces S", evolution_round_trip},
        {"evolution.schrodinger", "evolution", "continuous evolution matches automaton steps",
         evolution_schrodinger},
        {"evolution.translation", "evolution", "S commutes with translation", evolution_blocks},
        {"evolution.dispersion", "evolution", "free eigenphases are -+2 pi k / M_x", evolution_dispersion},
        {"fock.anticommutators", "fock", "canonical anticommutation relations", fock_anticommutators},
        {"fock.s_int", "fock", "Fock interaction operator equals the scatter permutation", fock_s_int},
        {"fock.s_free", "fock", "Fock free operator equals the shift permutation", fock_s_free},
        {"fock.h_int_local", "fock", "H_int only swaps 9<->6 and 5<->10 at one site", fock_h_int_local},
        {"fock.alternation", "fock", "alternating half-step Hamiltonians give S", fock_alternation},
        {"grassmann.algebra", "grassmann", "anticommutativity, nilpotency, associativity", grassmann_algebra},
        {"grassmann.identity_expansion", "grassmann", "exp(psi phi) = sum g g'", grassmann_identity_expansion},
        {"grassmann.orthonormality", "grassmann", "int gbar_tau g_rho = delta", grassmann_orthonormality},
        {"grassmann.primed_pairing", "grassmann", "int g'_tau gbar'_rho = eta delta", grassmann_primed_pairing},
        {"grassmann.free_extraction", "grassmann", "free factor extracts to the transport permutation",
         grassmann_free_extraction},
        {"grassmann.combined_extraction", "grassmann", "combined factor extracts to S_int S_free",
         grassmann_combined_extraction},
        {"grassmann.chain_rule", "grassmann", "integrating a shared slice multiplies step operators",
         grassmann_chain_rule},
        {"grassmann.thirring", "grassmann", "interaction matches the current-current form", grassmann_thirring},
    };
    return suites;
}

json suite_manifest() {
    json arr = json::array();
    for (const auto &s : suite_registry()) {
        arr.push_back({{"name", s.name}, {"module", s.module}, {"description", s.description}});
    }
    return arr;
}

std::vector<CheckResult> run_suites(const VerifyContext &ctx, const std::vector<std::string> &names) {
    const auto &registry = suite_registry();
    for (const auto &n : names) {
        if (std::none_of(registry.begin(), registry.end(), [&](const Suite &s) { return s.name == n; })) {
            throw ConfigError("unknown suite: " + n);
        }
    }
    std::vector<CheckResult> out;
    for (const auto &s : registry) {
        if (!names.empty() && std::find(names.begin(), names.end(), s.name) == names.end()) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = s.run(ctx);
        } catch (const BudgetExceeded &) {
            throw;
        } catch (const std::exception &e) {
            r = CheckResult{"", false, std::string("exception: ") + e.what(), 0};
        }
        r.suite = s.name;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

json verify_report(const VerifyContext &ctx, const std::vector<CheckResult> &results) {
    json arr = json::array();
    bool all = true;
    for (const auto &r : results) {
        arr.push_back({{"suite", r.suite}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
    }
    return json{{"M_x", ctx.sites}, {"seed", ctx.seed}, {"passed", all}, {"tolerances", tolerances_to_json(ctx.tol)},
                {"results", arr}};
}

}  // namespace fermicell
