#include "fermicell/fock.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "fermicell/grassmann.h"

namespace fermicell {

namespace {

constexpr double kPi = std::numbers::pi;

LadderOp cre(int bit) { return {bit, true}; }
LadderOp ann(int bit) { return {bit, false}; }

// Same as apply_ladder on a single-word mode string.
std::optional<std::pair<std::uint64_t, int>> apply_modes(std::uint64_t state, const std::vector<LadderOp> &ops) {
    int sign = 1;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const std::uint64_t bit = std::uint64_t{1} << it->bit;
        if (((state & bit) != 0) == it->dagger) {
            return std::nullopt;
        }
        if (std::popcount(state & (bit - 1)) % 2 == 1) {
            sign = -sign;
        }
        state ^= bit;
    }
    return std::pair{state, sign};
}

std::vector<std::vector<std::pair<std::uint64_t, Rational>>> columns(const ExactMatrix &m) {
    std::vector<std::vector<std::pair<std::uint64_t, Rational>>> cols(m.size());
    for (const auto &[k, v] : m.entries()) {
        cols[k.second].emplace_back(k.first, v);
    }
    return cols;
}

double periodic_distance(double x, double c, int sites) {
    double d = std::fmod(std::abs(x - c), static_cast<double>(sites));
    return std::min(d, sites - d);
}

}  // namespace

std::optional<std::pair<BitConfig, int>> apply_ladder(const BitConfig &config, const std::vector<LadderOp> &ops) {
    BitConfig c = config;
    int sign = 1;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (c.get(it->bit) == it->dagger) {
            return std::nullopt;
        }
        if (c.count_below(it->bit) % 2 == 1) {
            sign = -sign;
        }
        c.flip(it->bit);
    }
    return std::pair{c, sign};
}

SparseComplex term_matrix(const Basis &basis, const std::vector<FockTerm> &terms) {
    std::vector<Eigen::Triplet<cplx>> trip;
    for (std::size_t rho = 0; rho < basis.size(); ++rho) {
        for (const auto &term : terms) {
            auto r = apply_ladder(basis.state(rho), term.ops);
            if (!r) {
                continue;
            }
            auto tau = basis.find(r->first);
            if (!tau) {
                throw std::invalid_argument("term_matrix: operator leaves the basis");
            }
            trip.emplace_back(static_cast<int>(*tau), static_cast<int>(rho), term.coefficient * double(r->second));
        }
    }
    const auto n = static_cast<Eigen::Index>(basis.size());
    SparseComplex m(n, n);
    m.setFromTriplets(trip.begin(), trip.end());
    m.prune(cplx(0.0));
    return m;
}

FockOperator annihilator(const Basis &basis, int x, int gamma) {
    if (!basis.is_full()) {
        throw std::invalid_argument("annihilator: requires the full occupation basis");
    }
    return {term_matrix(basis, {{1.0, {ann(bit_position(x, gamma))}}}),
            "a_" + Species::from_index(gamma).name() + "(" + std::to_string(x) + ")"};
}

FockOperator creator(const Basis &basis, int x, int gamma) {
    if (!basis.is_full()) {
        throw std::invalid_argument("creator: requires the full occupation basis");
    }
    return {term_matrix(basis, {{1.0, {cre(bit_position(x, gamma))}}}),
            "a+_" + Species::from_index(gamma).name() + "(" + std::to_string(x) + ")"};
}

SparseComplex anticommutator(const SparseComplex &a, const SparseComplex &b) {
    SparseComplex r = a * b + b * a;
    r.prune(cplx(0.0));
    return r;
}

SparseComplex commutator(const SparseComplex &a, const SparseComplex &b) {
    SparseComplex r = a * b - b * a;
    r.prune(cplx(0.0));
    return r;
}

double max_abs(const SparseComplex &m) {
    double r = 0;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
        for (SparseComplex::InnerIterator it(m, k); it; ++it) {
            r = std::max(r, std::abs(it.value()));
        }
    }
    return r;
}

std::vector<FockTerm> scatter_generator_terms(int x) {
    const int r1 = bit_position(x, 0);
    const int r2 = bit_position(x, 1);
    const int l1 = bit_position(x, 2);
    const int l2 = bit_position(x, 3);
    return {
        {1.0, {cre(r1), ann(r2), cre(l1), ann(l2)}},
        {-1.0, {cre(r1), ann(r2), cre(l2), ann(l1)}},
        {-1.0, {cre(r2), ann(r1), cre(l1), ann(l2)}},
        {1.0, {cre(r2), ann(r1), cre(l2), ann(l1)}},
    };
}

Eigen::MatrixXcd site_interaction_exponential() {
    const Basis local = Basis::full(LatticeSpec(1), 16);
    const Eigen::MatrixXcd q = Eigen::MatrixXcd(term_matrix(local, scatter_generator_terms(0)));
    const Eigen::MatrixXcd exponent = cplx(0, kPi / 2) * q;
    return exponent.exp();
}

StepOperator build_S_int_fock(const Basis &basis) {
    if (basis.size() > kDefaultDenseCap) {
        throw BudgetExceeded("build_S_int_fock: basis exceeds the dense budget");
    }
    const Eigen::MatrixXcd local = site_interaction_exponential();
    std::vector<std::vector<std::pair<int, cplx>>> local_cols(16);
    for (int v = 0; v < 16; ++v) {
        for (int w = 0; w < 16; ++w) {
            if (std::abs(local(w, v)) > 1e-15) {
                local_cols[static_cast<std::size_t>(v)].emplace_back(w, local(w, v));
            }
        }
    }
    const auto n = static_cast<Eigen::Index>(basis.size());
    const int sites = basis.spec().sites();
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t rho = 0; rho < basis.size(); ++rho) {
        std::vector<std::pair<BitConfig, cplx>> partial{{basis.state(rho), 1.0}};
        for (int x = 0; x < sites; ++x) {
            std::vector<std::pair<BitConfig, cplx>> next;
            for (const auto &[c, amp] : partial) {
                for (const auto &[w, a] : local_cols[local_nibble(c, x).value]) {
                    BitConfig d = c;
                    set_nibble(d, x, Nibble{static_cast<std::uint8_t>(w)});
                    next.emplace_back(d, amp * a);
                }
            }
            partial = std::move(next);
        }
        for (const auto &[c, amp] : partial) {
            auto tau = basis.find(c);
            if (!tau) {
                throw std::logic_error("build_S_int_fock: interaction leaves the basis");
            }
            s(static_cast<Eigen::Index>(*tau), static_cast<Eigen::Index>(rho)) += amp;
        }
    }
    return StepOperator::dense(std::move(s), StepFactor::Int);
}

ExactMatrix build_S_free_species(int sites, Mover mover) {
    if (sites < 1 || sites > 16) {
        throw BudgetExceeded("build_S_free_species: expansion supports 1 to 16 sites");
    }
    // Generators 0..M-1 stand for creators a+(x), M..2M-1 for annihilators a(x). A Grassmann
    // monomial in ascending order is then the N-ordered operator word, and the sign of moving
    // creators to the left is the Grassmann reordering sign.
    const int m = sites;
    const int g = 2 * m;
    const int step = mover == Mover::R ? 1 : -1;
    GrassmannElement exponent(g);
    auto wrap = [m](int x) { return ((x % m) + m) % m; };
    for (int x = 0; x < m; ++x) {
        const int y = wrap(x + step);
        const auto c = GrassmannElement::generator(g, y);
        exponent += c * (GrassmannElement::generator(g, m + x) - GrassmannElement::generator(g, m + y));
    }
    const GrassmannElement expansion = exponent.is_zero() ? GrassmannElement::scalar(g, 1) : gexp(exponent);

    const std::uint64_t dim = std::uint64_t{1} << m;
    const Mask full = dim - 1;
    ExactMatrix s(dim);
    for (const auto &[mask, coef] : expansion.terms()) {
        std::vector<LadderOp> ops;
        for (Mask c = mask & full; c != 0; c &= c - 1) {
            ops.push_back(cre(std::countr_zero(c)));
        }
        for (Mask a = mask >> m; a != 0; a &= a - 1) {
            ops.push_back(ann(std::countr_zero(a)));
        }
        for (std::uint64_t rho = 0; rho < dim; ++rho) {
            auto r = apply_modes(rho, ops);
            if (r) {
                s.add(r->first, rho, r->second > 0 ? coef : Rational(-coef));
            }
        }
    }
    return s;
}

StepOperator build_S_free_fock(const Basis &basis) {
    const int sites = basis.spec().sites();
    std::array<std::vector<std::vector<std::pair<std::uint64_t, Rational>>>, kSpeciesCount> cols;
    for (int gamma = 0; gamma < kSpeciesCount; ++gamma) {
        cols[static_cast<std::size_t>(gamma)] =
            columns(build_S_free_species(sites, Species::from_index(gamma).mover));
    }
    const auto n = basis.size();
    std::vector<std::vector<std::pair<std::uint64_t, double>>> image(n);
    bool permutation = true;
    for (std::size_t rho = 0; rho < n; ++rho) {
        std::vector<std::pair<BitConfig, Rational>> partial{{BitConfig(sites), 1}};
        for (int gamma = 0; gamma < kSpeciesCount; ++gamma) {
            std::uint64_t occ = 0;
            for (int x = 0; x < sites; ++x) {
                occ |= std::uint64_t{basis.state(rho).occupied(x, gamma)} << x;
            }
            std::vector<std::pair<BitConfig, Rational>> next;
            for (const auto &[c, amp] : partial) {
                for (const auto &[target, v] : cols[static_cast<std::size_t>(gamma)][occ]) {
                    BitConfig d = c;
                    for (int x = 0; x < sites; ++x) {
                        d.set(bit_position(x, gamma), (target >> x) & 1);
                    }
                    next.emplace_back(d, amp * v);
                }
            }
            partial = std::move(next);
        }
        for (const auto &[c, amp] : partial) {
            auto tau = basis.find(c);
            if (!tau) {
                throw std::logic_error("build_S_free_fock: transport leaves the basis");
            }
            image[rho].emplace_back(*tau, amp.get_d());
        }
        if (image[rho].size() != 1 || std::abs(image[rho][0].second) != 1.0) {
            permutation = false;
        }
    }
    if (permutation) {
        PermutationForm p;
        for (const auto &col : image) {
            p.target.push_back(col[0].first);
            p.sign.push_back(col[0].second > 0 ? 1 : -1);
        }
        try {
            return StepOperator::permutation(std::move(p), StepFactor::Free);
        } catch (const std::invalid_argument &) {
            // not a bijection; fall through to the dense form
        }
    }
    if (n > kDefaultDenseCap) {
        throw BudgetExceeded("build_S_free_fock: non-permutation result exceeds the dense budget");
    }
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t rho = 0; rho < n; ++rho) {
        for (const auto &[tau, v] : image[rho]) {
            s(static_cast<Eigen::Index>(tau), static_cast<Eigen::Index>(rho)) += v;
        }
    }
    return StepOperator::dense(std::move(s), StepFactor::Free);
}

LatticeHamiltonian build_H_lattice(const Basis &basis, double epsilon) {
    const auto &spec = basis.spec();
    const int sites = spec.sites();
    std::vector<FockTerm> free_terms;
    std::vector<FockTerm> int_terms;
    const cplx half(0, 1.0 / (2 * epsilon));
    for (int x = 0; x < sites; ++x) {
        const int up = spec.wrap(x + 1);
        const int down = spec.wrap(x - 1);
        for (int gamma = 0; gamma < kSpeciesCount; ++gamma) {
            // i a+(x) [a(x+1) - a(x-1)] / (2 eps), with a minus sign for right movers.
            const cplx c = Species::from_index(gamma).mover == Mover::L ? half : -half;
            free_terms.push_back({c, {cre(bit_position(x, gamma)), ann(bit_position(up, gamma))}});
            free_terms.push_back({-c, {cre(bit_position(x, gamma)), ann(bit_position(down, gamma))}});
        }
        for (auto t : scatter_generator_terms(x)) {
            t.coefficient *= -kPi / (2 * epsilon);
            int_terms.push_back(std::move(t));
        }
    }
    return {term_matrix(basis, free_terms), term_matrix(basis, int_terms), epsilon};
}

Eigen::VectorXcd gaussian_pair(const Basis &basis, Species right, double center_right, Species left,
                               double center_left, double width) {
    const int sites = basis.spec().sites();
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (int xr = 0; xr < sites; ++xr) {
        for (int xl = 0; xl < sites; ++xl) {
            BitConfig c(sites);
            c.set(bit_position(xr, right), true);
            c.set(bit_position(xl, left), true);
            auto i = basis.find(c);
            if (!i) {
                throw std::invalid_argument("gaussian_pair: packet lies outside the basis");
            }
            const double dr = periodic_distance(xr, center_right, sites);
            const double dl = periodic_distance(xl, center_left, sites);
            q(static_cast<Eigen::Index>(*i)) = std::exp(-(dr * dr + dl * dl) / (4 * width * width));
        }
    }
    return q / q.norm();
}

Eigen::VectorXcd gaussian_single(const Basis &basis, Species species, double center, double width) {
    const int sites = basis.spec().sites();
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (int x = 0; x < sites; ++x) {
        BitConfig c(sites);
        c.set(bit_position(x, species), true);
        auto i = basis.find(c);
        if (!i) {
            throw std::invalid_argument("gaussian_single: packet lies outside the basis");
        }
        const double d = periodic_distance(x, center, sites);
        q(static_cast<Eigen::Index>(*i)) = std::exp(-d * d / (4 * width * width));
    }
    return q / q.norm();
}

TrotterReport trotter_compare(const Basis &basis, const Eigen::VectorXcd &q0, int n_steps, double width) {
    if (basis.size() > (std::uint64_t{1} << 16)) {
        throw BudgetExceeded("trotter_compare: sector too large");
    }
    const double eps = basis.spec().epsilon();
    const StepOperator s = build_step_operator(basis, StepFactor::Full);
    const LatticeHamiltonian h = build_H_lattice(basis, eps);
    Eigen::VectorXcd automaton = q0;
    Eigen::VectorXcd alternating = q0;
    for (int k = 0; k < n_steps; ++k) {
        automaton = apply_step(s, automaton);
        alternating = expm_multiply(h.interaction, expm_multiply(h.free, alternating, eps), eps);
    }
    const Eigen::VectorXcd continuum = expm_multiply(h.total(), q0, n_steps * eps);
    TrotterReport r;
    r.width = width;
    r.steps = n_steps;
    r.automaton_vs_alternating = (automaton - alternating).norm();
    r.automaton_vs_continuum = (automaton - continuum).norm();
    r.alternating_vs_continuum = (alternating - continuum).norm();
    return r;
}

TrotterScan trotter_width_scan(int sites, int n_steps, const std::vector<double> &widths) {
    const LatticeSpec spec(sites);
    const Basis basis = Basis::sector(spec, ChargeSector{1, 1, 1});
    const double center_right = sites / 4.0;
    const double center_left = center_right + n_steps;
    TrotterScan scan;
    for (double w : widths) {
        const auto q0 = gaussian_pair(basis, kR1, center_right, kL2, center_left, w);
        scan.reports.push_back(trotter_compare(basis, q0, n_steps, w));
    }
    scan.monotone = true;
    for (std::size_t i = 1; i < scan.reports.size(); ++i) {
        if (!(scan.reports[i].automaton_vs_continuum < scan.reports[i - 1].automaton_vs_continuum)) {
            scan.monotone = false;
        }
    }
    return scan;
}

std::string to_triplets(const SparseComplex &m) {
    std::vector<std::tuple<Eigen::Index, Eigen::Index, cplx>> entries;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
        for (SparseComplex::InnerIterator it(m, k); it; ++it) {
            entries.emplace_back(it.row(), it.col(), it.value());
        }
    }
    std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) {
        return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b) : std::get<1>(a) < std::get<1>(b);
    });
    std::ostringstream out;
    out.precision(17);
    for (const auto &[r, c, v] : entries) {
        out << r << ' ' << c << ' ' << v.real() << ' ' << v.imag() << '\n';
    }
    return out.str();
}

}  // namespace fermicell
