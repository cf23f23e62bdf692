#include <gtest/gtest.h>

#include "fermicell/grassmann.h"
#include "fermicell/rng.h"

using namespace fermicell;

namespace {

GrassmannElement psi(int n, int a) { return GrassmannElement::generator(n, a); }

GrassmannElement random_element(int g, Xoshiro256 &rng, bool even_only = false) {
    std::vector<GrassmannElement::Term> t;
    for (int i = 0; i < 8; ++i) {
        Mask m = rng.below(Mask{1} << g);
        if (even_only && (std::popcount(m) % 2 == 1)) {
            m &= m - 1;
        }
        Rational c(static_cast<long>(rng.below(11)) - 5, static_cast<unsigned long>(1 + rng.below(3)));
        c.canonicalize();
        t.emplace_back(m, c);
    }
    return GrassmannElement::from_terms(g, t);
}

}  // namespace

TEST(Grassmann, NilpotentAndAnticommuting) {
    const int g = 8;
    for (int a = 0; a < g; ++a) {
        EXPECT_TRUE((psi(g, a) * psi(g, a)).is_zero());
        for (int b = 0; b < g; ++b) {
            EXPECT_TRUE((psi(g, a) * psi(g, b) + psi(g, b) * psi(g, a)).is_zero());
        }
    }
}

TEST(Grassmann, CanonicalOrderCarriesSign) {
    const GrassmannElement p = psi(2, 1) * psi(2, 0);
    EXPECT_EQ(p, GrassmannElement::monomial(2, 0b11, -1));
    EXPECT_EQ(reorder_sign(0b10, 0b01), -1);
    EXPECT_EQ(reorder_sign(0b01, 0b10), 1);
}

TEST(Grassmann, AssociativeAndDistributiveRandomized) {
    Xoshiro256 rng(12);
    for (int g : {6, 12, 20}) {
        for (int i = 0; i < 50; ++i) {
            const auto x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
            ASSERT_EQ((x * y) * z, x * (y * z));
            ASSERT_EQ(x * (y + z), x * y + x * z);
            ASSERT_EQ(gmul(x, y), x * y);
        }
    }
}

TEST(Grassmann, EvenElementsCommute) {
    Xoshiro256 rng(13);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_element(10, rng, true), y = random_element(10, rng, true);
        ASSERT_TRUE(x.is_even());
        ASSERT_EQ(x * y, y * x);
    }
}

TEST(Grassmann, ExpFactorizes) {
    // psi_1 = 0, psi_2 = 1, phi_1 = 2, phi_2 = 3.
    const int n = 4;
    const GrassmannElement a = psi(n, 0) * psi(n, 2);
    const GrassmannElement b = psi(n, 1) * psi(n, 3);
    const GrassmannElement one = GrassmannElement::scalar(n, 1);
    EXPECT_EQ(gexp(a + b), (one + a) * (one + b));
}

TEST(Grassmann, ExpRejectsOddOrConstant) {
    EXPECT_THROW(gexp(psi(2, 0)), std::invalid_argument);
    EXPECT_THROW(gexp(GrassmannElement::scalar(2, 1)), std::invalid_argument);
    EXPECT_EQ(gexp(GrassmannElement(3)), GrassmannElement::scalar(3, 1));
}

TEST(Grassmann, ExpInverse) {
    Xoshiro256 rng(1);
    for (int i = 0; i < 20; ++i) {
        GrassmannElement x = random_element(8, rng, true);
        x -= GrassmannElement::scalar(8, x.constant());
        EXPECT_EQ(gexp(x) * gexp(-x), GrassmannElement::scalar(8, 1));
    }
}

TEST(Berezin, Basics) {
    EXPECT_EQ(integrate(psi(1, 0), 0), GrassmannElement::scalar(1, 1));
    EXPECT_TRUE(integrate(GrassmannElement::scalar(1, 3), 0).is_zero());
    // d psi_0 (psi_1 psi_0) = d psi_0 (-psi_0 psi_1) = -psi_1
    EXPECT_EQ(integrate(psi(2, 1) * psi(2, 0), 0), -psi(2, 1));
}

TEST(Berezin, OrderedMeasure) {
    const int n = 4;
    const auto measure = slice_measure(0, 4);
    EXPECT_EQ(measure, (std::vector<int>{3, 2, 1, 0}));
    const GrassmannElement top = psi(n, 0) * psi(n, 1) * psi(n, 2) * psi(n, 3);
    EXPECT_EQ(berezin(top, measure).constant(), 1);
    EXPECT_EQ(berezin(psi(n, 1) * psi(n, 0) * psi(n, 2) * psi(n, 3), measure).constant(), -1);
}

TEST(Berezin, IntegralOfDerivativeFreeIsZero) {
    Xoshiro256 rng(4);
    for (int i = 0; i < 20; ++i) {
        const GrassmannElement x = random_element(6, rng);
        // Integrating twice over the same variable gives zero.
        EXPECT_TRUE(integrate(integrate(x, 2), 2).is_zero());
    }
}

TEST(Relabel, PermutationSign) {
    const int n = 3;
    const GrassmannElement e = psi(n, 0) * psi(n, 1);
    EXPECT_EQ(relabel(e, n, {1, 0, 2}), -e);
    EXPECT_EQ(relabel(e, 4, {2, 3, 0}), GrassmannElement::monomial(4, 0b1100));
    EXPECT_EQ(compact(GrassmannElement::monomial(4, 0b1010, 2), {1, 3}), GrassmannElement::monomial(2, 0b11, 2));
}

TEST(Text, CanonicalForm) {
    const int n = 3;
    const GrassmannElement e = GrassmannElement::scalar(n, 1) + psi(n, 2) * psi(n, 0) * Rational(3, 2) + psi(n, 1);
    EXPECT_EQ(to_text(e, {"a", "b", "c"}), "+1\n+1 · b\n-3/2 · a c\n");
}
