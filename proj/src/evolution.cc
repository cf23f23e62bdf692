#include "fermicell/evolution.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fermicell/kernels.h"

namespace fermicell {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t apply_factor(std::uint64_t w, int sites, StepFactor which) {
    switch (which) {
        case StepFactor::Full:
            return swar::step(w, sites);
        case StepFactor::Free:
            return swar::transport(w, sites);
        case StepFactor::Int:
        case StepFactor::Site:
            return swar::interaction(w);
    }
    return w;
}

BitConfig apply_factor(const BitConfig &c, StepFactor which) {
    switch (which) {
        case StepFactor::Full:
            return automaton_step(c);
        case StepFactor::Free:
            return free_step(c);
        case StepFactor::Int:
        case StepFactor::Site:
            return interaction_step(c);
    }
    return c;
}

}  // namespace

WaveFunction wavefunction_from_ensemble(const Ensemble &e) {
    const auto &spec = e.spec();
    WaveFunction out{spec, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.num_configs())), 0};
    for (const auto &[c, p] : e.weights()) {
        out.q(static_cast<Eigen::Index>(c.index())) = std::sqrt(p);
    }
    return out;
}

WaveFunction delta_wavefunction(const BitConfig &config) {
    LatticeSpec spec(config.sites());
    WaveFunction out{spec, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.num_configs())), 0};
    out.q(static_cast<Eigen::Index>(config.index())) = 1.0;
    return out;
}

Ensemble probabilities(const WaveFunction &q) {
    std::map<BitConfig, double> w;
    for (Eigen::Index i = 0; i < q.q.size(); ++i) {
        const double p = q.q(i) * q.q(i);
        if (p != 0.0) {
            w.emplace_hint(w.end(), BitConfig::from_index(static_cast<std::uint64_t>(i), q.spec), p);
        }
    }
    return Ensemble(q.spec, std::move(w));
}

std::string step_factor_name(StepFactor f) {
    switch (f) {
        case StepFactor::Full:
            return "full";
        case StepFactor::Free:
            return "free";
        case StepFactor::Int:
            return "int";
        case StepFactor::Site:
            return "site";
    }
    return "?";
}

StepOperator StepOperator::permutation(PermutationForm perm, StepFactor factor) {
    const auto n = perm.target.size();
    if (perm.sign.size() != n) {
        throw std::invalid_argument("permutation: sign and target sizes differ");
    }
    StepOperator s;
    s.is_perm_ = true;
    s.factor_ = factor;
    s.source_.assign(n, n);
    for (std::size_t rho = 0; rho < n; ++rho) {
        const auto tau = perm.target[rho];
        if (tau >= n || s.source_[tau] != n) {
            throw std::invalid_argument("permutation: target map is not a bijection");
        }
        if (perm.sign[rho] != 1 && perm.sign[rho] != -1) {
            throw std::invalid_argument("permutation: signs must be +1 or -1");
        }
        s.source_[tau] = rho;
    }
    s.perm_ = std::move(perm);
    return s;
}

StepOperator StepOperator::dense(Eigen::MatrixXcd matrix, StepFactor factor) {
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("dense step operator must be square");
    }
    StepOperator s;
    s.is_perm_ = false;
    s.factor_ = factor;
    s.dense_ = std::move(matrix);
    return s;
}

std::size_t StepOperator::dim() const {
    return is_perm_ ? perm_.target.size() : static_cast<std::size_t>(dense_.rows());
}

const PermutationForm &StepOperator::perm() const {
    if (!is_perm_) {
        throw std::logic_error("step operator is not in permutation form");
    }
    return perm_;
}

bool StepOperator::is_unique_jump() const {
    if (!is_perm_) {
        return false;
    }
    return std::all_of(perm_.sign.begin(), perm_.sign.end(), [](std::int8_t s) { return s == 1; });
}

Eigen::MatrixXcd StepOperator::to_dense() const {
    if (!is_perm_) {
        return dense_;
    }
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index rho = 0; rho < n; ++rho) {
        m(static_cast<Eigen::Index>(perm_.target[rho]), rho) = perm_.sign[rho];
    }
    return m;
}

Eigen::MatrixXd StepOperator::to_dense_real() const {
    if (!is_perm_) {
        return dense_.real();
    }
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index rho = 0; rho < n; ++rho) {
        m(static_cast<Eigen::Index>(perm_.target[rho]), rho) = perm_.sign[rho];
    }
    return m;
}

StepOperator compose(const StepOperator &a, const StepOperator &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("compose: dimension mismatch");
    }
    const StepFactor f = a.factor() == b.factor() ? a.factor() : StepFactor::Full;
    if (a.is_permutation() && b.is_permutation()) {
        PermutationForm p;
        const auto n = a.dim();
        p.target.resize(n);
        p.sign.resize(n);
        for (std::size_t rho = 0; rho < n; ++rho) {
            const auto mid = b.perm().target[rho];
            p.target[rho] = a.perm().target[mid];
            p.sign[rho] = static_cast<std::int8_t>(a.perm().sign[mid] * b.perm().sign[rho]);
        }
        return StepOperator::permutation(std::move(p), f);
    }
    return StepOperator::dense(a.to_dense() * b.to_dense(), f);
}

StepOperator build_step_operator(const LatticeSpec &spec, StepFactor which, std::uint64_t max_dim) {
    if (which == StepFactor::Site) {
        return build_site_operator();
    }
    if (!spec.indexable() || spec.bits() >= 64 || spec.num_configs() > max_dim) {
        throw BudgetExceeded("step operator for M_x=" + std::to_string(spec.sites()) +
                             " exceeds the dimension budget " + std::to_string(max_dim));
    }
    const auto n = spec.num_configs();
    PermutationForm p;
    p.target.resize(n);
    p.sign.assign(n, 1);
    for (std::uint64_t rho = 0; rho < n; ++rho) {
        p.target[rho] = rho;
    }
    if (which == StepFactor::Full && spec.sites() <= 16) {
        std::vector<std::uint64_t> in = p.target;
        step_batch(in, p.target, spec.sites());
    } else {
        for (std::uint64_t rho = 0; rho < n; ++rho) {
            p.target[rho] = apply_factor(rho, spec.sites(), which);
        }
    }
    return StepOperator::permutation(std::move(p), which);
}

StepOperator build_step_operator(const Basis &basis, StepFactor which) {
    if (basis.is_full()) {
        return build_step_operator(basis.spec(), which, basis.size());
    }
    const auto n = basis.size();
    PermutationForm p;
    p.target.resize(n);
    p.sign.assign(n, 1);
    for (std::size_t rho = 0; rho < n; ++rho) {
        auto tau = basis.find(apply_factor(basis.state(rho), which));
        if (!tau) {
            throw std::logic_error("step operator leaves the charge sector");
        }
        p.target[rho] = *tau;
    }
    return StepOperator::permutation(std::move(p), which);
}

StepOperator build_site_operator() {
    PermutationForm p;
    p.target.resize(16);
    p.sign.assign(16, 1);
    for (std::uint64_t v = 0; v < 16; ++v) {
        p.target[v] = swar::interaction(v);
    }
    return StepOperator::permutation(std::move(p), StepFactor::Site);
}

WaveFunction apply_step(const StepOperator &s, const WaveFunction &q) {
    if (static_cast<std::size_t>(q.q.size()) != s.dim()) {
        throw std::invalid_argument("apply_step: dimension mismatch");
    }
    WaveFunction out{q.spec, Eigen::VectorXd(q.q.size()), q.t + 1};
    if (s.is_permutation()) {
        const auto &src = s.source();
        gather({q.q.data(), static_cast<std::size_t>(q.q.size())}, src,
               {out.q.data(), static_cast<std::size_t>(out.q.size())});
        if (!s.is_unique_jump()) {
            for (std::size_t tau = 0; tau < src.size(); ++tau) {
                out.q(static_cast<Eigen::Index>(tau)) *= s.perm().sign[src[tau]];
            }
        }
        return out;
    }
    Eigen::VectorXcd r = s.to_dense() * q.q.cast<cplx>();
    if (r.imag().cwiseAbs().maxCoeff() > 1e-12) {
        throw std::domain_error("apply_step: complex operator on a real wave function");
    }
    out.q = r.real();
    return out;
}

Eigen::VectorXcd apply_step(const StepOperator &s, const Eigen::VectorXcd &q) {
    if (static_cast<std::size_t>(q.size()) != s.dim()) {
        throw std::invalid_argument("apply_step: dimension mismatch");
    }
    if (!s.is_permutation()) {
        return s.to_dense() * q;
    }
    Eigen::VectorXcd out(q.size());
    const auto &src = s.source();
    for (std::size_t tau = 0; tau < src.size(); ++tau) {
        out(static_cast<Eigen::Index>(tau)) = static_cast<double>(s.perm().sign[src[tau]]) *
                                              q(static_cast<Eigen::Index>(src[tau]));
    }
    return out;
}

Eigen::MatrixXcd Hamiltonian::evolution(double t) const {
    Eigen::VectorXcd d(energies.size());
    for (Eigen::Index i = 0; i < energies.size(); ++i) {
        d(i) = std::polar(1.0, -t * energies(i));
    }
    return vectors * d.asDiagonal() * vectors.adjoint();
}

Hamiltonian hamiltonian_from_matrix(const Eigen::MatrixXcd &h, double epsilon) {
    if (hermiticity_defect(h) > 1e-10) {
        throw std::domain_error("hamiltonian_from_matrix: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Hamiltonian out;
    out.matrix = h;
    out.epsilon = epsilon;
    out.vectors = es.eigenvectors();
    out.energies = es.eigenvalues();
    return out;
}

Hamiltonian hamiltonian_from_step(const StepOperator &s, double epsilon, std::uint64_t max_dim) {
    const auto n = s.dim();
    if (n > max_dim) {
        throw BudgetExceeded("hamiltonian_from_step: dimension " + std::to_string(n) + " exceeds the dense budget " +
                             std::to_string(max_dim));
    }
    const auto ni = static_cast<Eigen::Index>(n);
    Hamiltonian out;
    out.epsilon = epsilon;
    out.vectors = Eigen::MatrixXcd::Zero(ni, ni);
    out.energies.resize(ni);
    if (s.is_permutation()) {
        // A cycle c_0 -> c_1 -> ... -> c_{L-1} -> c_0 with signs s_j has eigenvalues
        // lambda^L = prod s_j and eigenvector entries a_{j+1} = a_j s_j / lambda.
        const auto &p = s.perm();
        std::vector<bool> seen(n, false);
        Eigen::Index col = 0;
        for (std::size_t start = 0; start < n; ++start) {
            if (seen[start]) {
                continue;
            }
            std::vector<std::size_t> cycle;
            int sign_product = 1;
            for (auto c = start; !seen[c]; c = p.target[c]) {
                seen[c] = true;
                cycle.push_back(c);
                sign_product *= p.sign[c];
            }
            const auto len = static_cast<double>(cycle.size());
            const double offset = sign_product > 0 ? 0.0 : kPi / len;
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                double phase = principal_phase(offset + 2 * kPi * static_cast<double>(k) / len, 1e-12);
                if (std::abs(phase - kPi) < 1e-12) {
                    ++out.branch_cut_hits;
                }
                const cplx lambda = std::polar(1.0, phase);
                cplx a = 1.0 / std::sqrt(len);
                for (auto c : cycle) {
                    out.vectors(static_cast<Eigen::Index>(c), col) = a;
                    a = a * static_cast<double>(p.sign[c]) / lambda;
                }
                out.energies(col) = -phase / epsilon;
                ++col;
            }
        }
    } else {
        if (unitarity_defect(s.to_dense()) > 1e-10) {
            throw std::domain_error("hamiltonian_from_step: operator is not unitary");
        }
        auto spec = unitary_spectrum(s.to_dense());
        out.vectors = spec.vectors;
        out.energies = -spec.phases / epsilon;
        out.branch_cut_hits = spec.branch_cut_hits;
    }
    out.matrix = out.vectors * out.energies.cast<cplx>().asDiagonal() * out.vectors.adjoint();
    out.matrix = 0.5 * (out.matrix + out.matrix.adjoint()).eval();
    return out;
}

Eigen::VectorXcd schrodinger_evolve(const Hamiltonian &h, const Eigen::VectorXcd &q, double t) {
    if (q.size() != h.energies.size()) {
        throw std::invalid_argument("schrodinger_evolve: dimension mismatch");
    }
    Eigen::VectorXcd c = h.vectors.adjoint() * q;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        c(i) *= std::polar(1.0, -t * h.energies(i));
    }
    return h.vectors * c;
}

Hamiltonian delta_H(const Hamiltonian &h_free, const Hamiltonian &h_int, double epsilon) {
    if (h_free.matrix.rows() != h_int.matrix.rows()) {
        throw std::invalid_argument("delta_H: dimension mismatch");
    }
    Eigen::MatrixXcd u = h_int.evolution(epsilon) * h_free.evolution(epsilon);
    auto spec = unitary_spectrum(u);
    Eigen::MatrixXcd total = spec.vectors * (-spec.phases / epsilon).cast<cplx>().asDiagonal() * spec.vectors.adjoint();
    Eigen::MatrixXcd dh = total - h_free.matrix - h_int.matrix;
    dh = 0.5 * (dh + dh.adjoint()).eval();
    Hamiltonian out = hamiltonian_from_matrix(dh, epsilon);
    out.branch_cut_hits = spec.branch_cut_hits;
    return out;
}

std::vector<double> free_spectrum(const LatticeSpec &spec, Species species) {
    const int m = spec.sites();
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(m, m);
    for (int x = 0; x < m; ++x) {
        BitConfig c(m);
        c.set(bit_position(x, species), true);
        BitConfig moved = free_step(c);
        for (int y = 0; y < m; ++y) {
            if (moved.occupied(y, species)) {
                block(y, x) = 1.0;
            }
        }
    }
    auto us = unitary_spectrum(block);
    std::vector<double> phases(us.phases.data(), us.phases.data() + us.phases.size());
    std::sort(phases.begin(), phases.end());
    return phases;
}

double free_phase(const LatticeSpec &spec, Species species, int k) {
    const double sign = species.mover == Mover::R ? -1.0 : 1.0;
    return principal_phase(sign * 2 * kPi * k / spec.sites(), 1e-12);
}

double translation_commutator(const LatticeSpec &spec, std::uint64_t max_dim) {
    if (!spec.indexable() || spec.bits() >= 64 || spec.num_configs() > max_dim) {
        throw BudgetExceeded("translation_commutator: configuration space exceeds the budget");
    }
    for (std::uint64_t tau = 0; tau < spec.num_configs(); ++tau) {
        BitConfig c = BitConfig::from_index(tau, spec);
        if (automaton_step(translate(c, 1)) != translate(automaton_step(c), 1)) {
            return 1.0;
        }
    }
    return 0.0;
}

}  // namespace fermicell
