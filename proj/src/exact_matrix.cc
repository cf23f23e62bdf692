#include "fermicell/exact_matrix.h"

#include <sstream>
#include <stdexcept>

namespace fermicell {

ExactMatrix ExactMatrix::identity(std::uint64_t n) {
    ExactMatrix m(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        m.entries_.emplace(Key{i, i}, 1);
    }
    return m;
}

ExactMatrix ExactMatrix::from_permutation(const std::vector<std::uint64_t> &target,
                                          const std::vector<std::int8_t> &sign) {
    ExactMatrix m(target.size());
    for (std::uint64_t rho = 0; rho < target.size(); ++rho) {
        m.set(target[rho], rho, sign.empty() ? 1 : sign[rho]);
    }
    return m;
}

Rational ExactMatrix::get(std::uint64_t row, std::uint64_t col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

void ExactMatrix::set(std::uint64_t row, std::uint64_t col, const Rational &v) {
    if (row >= n_ || col >= n_) {
        throw std::out_of_range("ExactMatrix index out of range");
    }
    if (v == 0) {
        entries_.erase({row, col});
    } else {
        entries_[{row, col}] = v;
    }
}

void ExactMatrix::add(std::uint64_t row, std::uint64_t col, const Rational &v) { set(row, col, get(row, col) + v); }

Rational ExactMatrix::trace() const {
    Rational t = 0;
    for (const auto &[k, v] : entries_) {
        if (k.first == k.second) {
            t += v;
        }
    }
    return t;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(n_);
    for (const auto &[k, v] : entries_) {
        m.entries_.emplace(Key{k.second, k.first}, v);
    }
    return m;
}

ExactMatrix ExactMatrix::conjugate_by_signs(const std::vector<std::int8_t> &signs) const {
    ExactMatrix m(n_);
    for (const auto &[k, v] : entries_) {
        m.entries_.emplace(k, v * signs[k.first] * signs[k.second]);
    }
    return m;
}

bool ExactMatrix::is_signed_permutation() const {
    if (entries_.size() != n_) {
        return false;
    }
    std::vector<bool> row_seen(n_, false);
    std::vector<bool> col_seen(n_, false);
    for (const auto &[k, v] : entries_) {
        if (row_seen[k.first] || col_seen[k.second] || (v != 1 && v != -1)) {
            return false;
        }
        row_seen[k.first] = col_seen[k.second] = true;
    }
    return true;
}

bool ExactMatrix::is_unique_jump() const {
    if (!is_signed_permutation()) {
        return false;
    }
    for (const auto &[k, v] : entries_) {
        if (v != 1) {
            return false;
        }
    }
    return true;
}

ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("ExactMatrix product: dimension mismatch");
    }
    std::vector<std::vector<std::pair<std::uint64_t, const Rational *>>> b_rows(b.n_);
    for (const auto &[k, v] : b.entries_) {
        b_rows[k.first].emplace_back(k.second, &v);
    }
    ExactMatrix m(a.n_);
    for (const auto &[k, v] : a.entries_) {
        for (const auto &[col, w] : b_rows[k.second]) {
            m.entries_[{k.first, col}] += v * *w;
        }
    }
    for (auto it = m.entries_.begin(); it != m.entries_.end();) {
        it = it->second == 0 ? m.entries_.erase(it) : std::next(it);
    }
    return m;
}

std::string ExactMatrix::to_triplets() const {
    std::ostringstream out;
    for (const auto &[k, v] : entries_) {
        out << k.first << ' ' << k.second << ' ' << v.get_str() << '\n';
    }
    return out.str();
}

}  // namespace fermicell
