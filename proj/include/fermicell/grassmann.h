#pragma once

// Exact Grassmann algebra over at most 64 generators. A monomial is a bitmask
// over generator indices and is always stored with its generators in
// ascending order; the sign of any reordering is folded into the coefficient.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fermicell/exact_matrix.h"

namespace fermicell {

using Mask = std::uint64_t;

inline constexpr int kMaxGenerators = 64;

/// (-1)^(number of pairs i in a, j in b with i > j): the sign of writing the
/// ordered monomial a followed by the ordered monomial b in ascending order.
int reorder_sign(Mask a, Mask b);

class GrassmannElement {
   public:
    using Term = std::pair<Mask, Rational>;

    GrassmannElement() = default;
    explicit GrassmannElement(int generators);

    static GrassmannElement scalar(int generators, const Rational &c);
    static GrassmannElement generator(int generators, int alpha);
    /// c * psi_{i1} psi_{i2} ... with i1 < i2 < ... the set bits of `mask`.
    static GrassmannElement monomial(int generators, Mask mask, const Rational &c = 1);
    /// Builds from unsorted terms; duplicates are summed and zeros dropped.
    static GrassmannElement from_terms(int generators, std::vector<Term> terms);

    int generators() const { return generators_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Mask mask) const;
    Rational constant() const { return coefficient(0); }

    bool is_even() const;
    bool is_odd() const;
    int max_degree() const;

    GrassmannElement operator-() const;
    GrassmannElement &operator+=(const GrassmannElement &o);
    GrassmannElement &operator-=(const GrassmannElement &o);
    GrassmannElement &operator*=(const Rational &c);

    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement &b) { return a += b; }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement &b) { return a -= b; }
    friend GrassmannElement operator*(GrassmannElement a, const Rational &c) { return a *= c; }
    friend GrassmannElement operator*(const Rational &c, GrassmannElement a) { return a *= c; }
    friend GrassmannElement operator*(const GrassmannElement &a, const GrassmannElement &b);
    friend bool operator==(const GrassmannElement &a, const GrassmannElement &b) {
        return a.generators_ == b.generators_ && a.terms_ == b.terms_;
    }

   private:
    int generators_ = 0;
    std::vector<Term> terms_;  // sorted by mask, no zero coefficients
};

GrassmannElement gmul(const GrassmannElement &a, const GrassmannElement &b);

/// exp(a) for an even element with zero constant term; the series stops by nilpotency.
GrassmannElement gexp(const GrassmannElement &a);

/// Single Berezin integral: psi_alpha is moved to the front of each monomial and removed.
GrassmannElement integrate(const GrassmannElement &e, int alpha);

/// Iterated integral int d psi_{m[0]} d psi_{m[1]} ... e, written left to right as in
/// the measure; the rightmost differential acts first.
GrassmannElement berezin(const GrassmannElement &e, const std::vector<int> &measure);

/// Measure d psi_{offset+M-1} ... d psi_{offset}, the block convention for one slice.
std::vector<int> slice_measure(int offset, int count);

/// Renames generator i to map[i] in a space of `generators` generators.
GrassmannElement relabel(const GrassmannElement &e, int generators, const std::vector<int> &map);

/// Drops generators that appear in no term, renumbering the rest in order. `keep` lists the kept indices.
GrassmannElement compact(const GrassmannElement &e, const std::vector<int> &keep);

/// Canonical text: terms by degree then mask, "+c · name name ...", one per line.
std::string to_text(const GrassmannElement &e, const std::vector<std::string> &names);

}  // namespace fermicell
