#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fermicell {

using Rational = mpq_class;

/// Sparse square matrix with exact rational entries; zeros are never stored.
class ExactMatrix {
   public:
    using Key = std::pair<std::uint64_t, std::uint64_t>;  // (row, col)

    ExactMatrix() = default;
    explicit ExactMatrix(std::uint64_t n) : n_(n) {}

    static ExactMatrix identity(std::uint64_t n);
    /// Column rho has a single entry sign[rho] in row target[rho].
    static ExactMatrix from_permutation(const std::vector<std::uint64_t> &target, const std::vector<std::int8_t> &sign);

    std::uint64_t size() const { return n_; }
    const std::map<Key, Rational> &entries() const { return entries_; }
    Rational get(std::uint64_t row, std::uint64_t col) const;
    void set(std::uint64_t row, std::uint64_t col, const Rational &v);
    void add(std::uint64_t row, std::uint64_t col, const Rational &v);

    Rational trace() const;
    ExactMatrix transpose() const;
    /// Diagonal similarity F M F with F = diag(signs).
    ExactMatrix conjugate_by_signs(const std::vector<std::int8_t> &signs) const;

    /// True when every column and every row holds exactly one nonzero entry equal to +1 or -1.
    bool is_signed_permutation() const;
    bool is_unique_jump() const;

    friend ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b);
    friend bool operator==(const ExactMatrix &a, const ExactMatrix &b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    /// "row col value" lines in row-major order.
    std::string to_triplets() const;

   private:
    std::uint64_t n_ = 0;
    std::map<Key, Rational> entries_;
};

}  // namespace fermicell
