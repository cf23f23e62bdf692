#include "fermicell/grassmann.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fermicell {

namespace {

Mask below(int alpha) { return alpha >= 64 ? ~Mask{0} : (Mask{1} << alpha) - 1; }

void check_generators(int g) {
    if (g < 0 || g > kMaxGenerators) {
        throw std::invalid_argument("Grassmann generator count must lie in [0, 64]");
    }
}

}  // namespace

int reorder_sign(Mask a, Mask b) {
    int inversions = 0;
    while (b != 0) {
        const int j = std::countr_zero(b);
        b &= b - 1;
        inversions += std::popcount(a & ~below(j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

GrassmannElement::GrassmannElement(int generators) : generators_(generators) { check_generators(generators); }

GrassmannElement GrassmannElement::scalar(int generators, const Rational &c) {
    return monomial(generators, 0, c);
}

GrassmannElement GrassmannElement::generator(int generators, int alpha) {
    if (alpha < 0 || alpha >= generators) {
        throw std::out_of_range("Grassmann generator index out of range");
    }
    return monomial(generators, Mask{1} << alpha, 1);
}

GrassmannElement GrassmannElement::monomial(int generators, Mask mask, const Rational &c) {
    GrassmannElement e(generators);
    if (generators < 64 && (mask >> generators) != 0) {
        throw std::out_of_range("monomial uses a generator outside the algebra");
    }
    if (c != 0) {
        e.terms_.emplace_back(mask, c);
    }
    return e;
}

GrassmannElement GrassmannElement::from_terms(int generators, std::vector<Term> terms) {
    GrassmannElement e(generators);
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
    for (auto &t : terms) {
        if (!e.terms_.empty() && e.terms_.back().first == t.first) {
            e.terms_.back().second += t.second;
        } else {
            e.terms_.push_back(std::move(t));
        }
    }
    std::erase_if(e.terms_, [](const Term &t) { return t.second == 0; });
    return e;
}

Rational GrassmannElement::coefficient(Mask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term &t, Mask m) { return t.first < m; });
    return (it != terms_.end() && it->first == mask) ? it->second : Rational(0);
}

bool GrassmannElement::is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return std::popcount(t.first) % 2 == 0; });
}

bool GrassmannElement::is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return std::popcount(t.first) % 2 == 1; });
}

int GrassmannElement::max_degree() const {
    int d = -1;
    for (const auto &t : terms_) {
        d = std::max(d, std::popcount(t.first));
    }
    return d;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement e = *this;
    for (auto &t : e.terms_) {
        t.second = -t.second;
    }
    return e;
}

GrassmannElement &GrassmannElement::operator+=(const GrassmannElement &o) {
    if (o.generators_ != generators_) {
        throw std::invalid_argument("Grassmann sum over different generator sets");
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) {
                merged.emplace_back(a->first, std::move(c));
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

GrassmannElement &GrassmannElement::operator-=(const GrassmannElement &o) { return *this += -o; }

GrassmannElement &GrassmannElement::operator*=(const Rational &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

GrassmannElement operator*(const GrassmannElement &a, const GrassmannElement &b) {
    if (a.generators_ != b.generators_) {
        throw std::invalid_argument("Grassmann product over different generator sets");
    }
    std::unordered_map<Mask, Rational> acc;
    acc.reserve(a.terms_.size() * 2 + b.terms_.size());
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            if ((ma & mb) != 0) {
                continue;
            }
            Rational c = ca * cb;
            if (reorder_sign(ma, mb) < 0) {
                c = -c;
            }
            acc[ma | mb] += c;
        }
    }
    std::vector<GrassmannElement::Term> terms;
    terms.reserve(acc.size());
    for (auto &[m, c] : acc) {
        if (c != 0) {
            terms.emplace_back(m, std::move(c));
        }
    }
    return GrassmannElement::from_terms(a.generators_, std::move(terms));
}

GrassmannElement gmul(const GrassmannElement &a, const GrassmannElement &b) { return a * b; }

GrassmannElement gexp(const GrassmannElement &a) {
    if (!a.is_even()) {
        throw std::invalid_argument("gexp requires an even element");
    }
    if (a.constant() != 0) {
        throw std::invalid_argument("gexp requires a nilpotent element (zero constant term)");
    }
    GrassmannElement sum = GrassmannElement::scalar(a.generators(), 1);
    GrassmannElement term = sum;
    for (int k = 1; k <= a.generators() / 2 + 1; ++k) {
        term = term * a;
        term *= Rational(1, k);
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    return sum;
}

GrassmannElement integrate(const GrassmannElement &e, int alpha) {
    if (alpha < 0 || alpha >= e.generators()) {
        throw std::out_of_range("integration variable outside the algebra");
    }
    const Mask bit = Mask{1} << alpha;
    std::vector<GrassmannElement::Term> terms;
    for (const auto &[m, c] : e.terms()) {
        if (m & bit) {
            const bool odd = std::popcount(m & below(alpha)) % 2 == 1;
            terms.emplace_back(m & ~bit, odd ? Rational(-c) : c);
        }
    }
    return GrassmannElement::from_terms(e.generators(), std::move(terms));
}

GrassmannElement berezin(const GrassmannElement &e, const std::vector<int> &measure) {
    GrassmannElement out = e;
    for (auto it = measure.rbegin(); it != measure.rend(); ++it) {
        out = integrate(out, *it);
    }
    return out;
}

std::vector<int> slice_measure(int offset, int count) {
    std::vector<int> m;
    for (int a = count - 1; a >= 0; --a) {
        m.push_back(offset + a);
    }
    return m;
}

GrassmannElement relabel(const GrassmannElement &e, int generators, const std::vector<int> &map) {
    if (static_cast<int>(map.size()) < e.generators()) {
        throw std::invalid_argument("relabel: map does not cover every generator");
    }
    std::vector<GrassmannElement::Term> terms;
    terms.reserve(e.size());
    for (const auto &[m, c] : e.terms()) {
        Mask out = 0;
        int inversions = 0;
        for (Mask rest = m; rest != 0; rest &= rest - 1) {
            const int target = map[static_cast<std::size_t>(std::countr_zero(rest))];
            if (target < 0 || target >= generators) {
                throw std::out_of_range("relabel: target generator outside the algebra");
            }
            const Mask bit = Mask{1} << target;
            if (out & bit) {
                throw std::invalid_argument("relabel: map is not injective");
            }
            inversions += std::popcount(out & ~below(target + 1));
            out |= bit;
        }
        terms.emplace_back(out, (inversions & 1) ? Rational(-c) : c);
    }
    return GrassmannElement::from_terms(generators, std::move(terms));
}

GrassmannElement compact(const GrassmannElement &e, const std::vector<int> &keep) {
    std::vector<int> map(static_cast<std::size_t>(e.generators()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        map[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    for (const auto &[m, c] : e.terms()) {
        for (Mask rest = m; rest != 0; rest &= rest - 1) {
            if (map[static_cast<std::size_t>(std::countr_zero(rest))] < 0) {
                throw std::invalid_argument("compact: a dropped generator is still present");
            }
        }
    }
    for (auto &v : map) {
        if (v < 0) {
            v = 0;  // never referenced
        }
    }
    return relabel(e, static_cast<int>(keep.size()), map);
}

std::string to_text(const GrassmannElement &e, const std::vector<std::string> &names) {
    auto terms = e.terms();
    std::stable_sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        const int da = std::popcount(a.first);
        const int db = std::popcount(b.first);
        return da != db ? da < db : a.first < b.first;
    });
    std::ostringstream out;
    for (const auto &[m, c] : terms) {
        out << (c > 0 ? "+" : "-") << Rational(abs(c)).get_str();
        if (m != 0) {
            out << " ·";
            for (Mask rest = m; rest != 0; rest &= rest - 1) {
                const auto i = static_cast<std::size_t>(std::countr_zero(rest));
                out << ' ' << (i < names.size() ? names[i] : "g" + std::to_string(i));
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace fermicell
