#include <gtest/gtest.h>

#include <algorithm>

#include "fermicell/automaton.h"
#include "fermicell/kernels.h"
#include "fermicell/rng.h"

using namespace fermicell;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, int sites, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<std::uint64_t> w(n);
    for (auto &v : w) {
        v = rng.next() & swar::word_mask(sites);
    }
    return w;
}

}  // namespace

TEST(Kernels, ScalarAlwaysAvailable) {
    const auto isas = available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), Isa::Scalar);
    EXPECT_NE(kernels_for(Isa::Scalar), nullptr);
}

TEST(Kernels, SwarMatchesMultiWordPath) {
    for (int sites = 1; sites <= 16; ++sites) {
        const LatticeSpec spec(sites);
        for (std::uint64_t w : random_words(200, sites, 100 + sites)) {
            const BitConfig c = BitConfig::from_index(w, spec);
            ASSERT_EQ(swar::step(w, sites), automaton_step(c).index());
            ASSERT_EQ(swar::inverse_step(w, sites), inverse_step(c).index());
        }
    }
}

TEST(Kernels, InteractionTableOnAllNibbles) {
    for (std::uint64_t v = 0; v < 16; ++v) {
        std::uint64_t expected = v;
        if (v == 9) expected = 6;
        if (v == 6) expected = 9;
        if (v == 5) expected = 10;
        if (v == 10) expected = 5;
        EXPECT_EQ(swar::interaction(v), expected) << v;
    }
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {};

TEST_P(KernelEquivalence, StepMatchesScalarBitForBit) {
    const StepKernels *k = kernels_for(GetParam());
    const StepKernels *ref = kernels_for(Isa::Scalar);
    ASSERT_NE(k, nullptr);
    for (int sites = 1; sites <= 16; ++sites) {
        // Odd lengths exercise the vector tail.
        for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 33u, 1000u}) {
            const auto in = random_words(n, sites, 17 * sites + n);
            std::vector<std::uint64_t> a(n), b(n);
            k->step(in.data(), a.data(), n, sites);
            ref->step(in.data(), b.data(), n, sites);
            ASSERT_EQ(a, b) << "sites=" << sites << " n=" << n;
            k->inverse_step(in.data(), a.data(), n, sites);
            ref->inverse_step(in.data(), b.data(), n, sites);
            ASSERT_EQ(a, b);
            k->interaction(in.data(), a.data(), n);
            ref->interaction(in.data(), b.data(), n);
            ASSERT_EQ(a, b);
        }
    }
}

TEST_P(KernelEquivalence, GatherMatchesScalar) {
    const StepKernels *k = kernels_for(GetParam());
    const StepKernels *ref = kernels_for(Isa::Scalar);
    ASSERT_NE(k, nullptr);
    Xoshiro256 rng(5);
    for (std::size_t n : {1u, 2u, 5u, 64u, 1001u}) {
        std::vector<double> src(n);
        std::vector<std::uint64_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) {
            src[i] = rng.uniform();
            idx[i] = rng.below(n);
        }
        std::vector<double> a(n), b(n);
        k->gather(src.data(), idx.data(), a.data(), n);
        ref->gather(src.data(), idx.data(), b.data(), n);
        ASSERT_EQ(a, b);
    }
}

INSTANTIATE_TEST_SUITE_P(AllIsas, KernelEquivalence, ::testing::ValuesIn(available_isas()),
                         [](const ::testing::TestParamInfo<Isa> &info) { return std::string(isa_name(info.param)); });

TEST(Kernels, BatchHelpersUseActiveKernels) {
    const auto in = random_words(50, 4, 3);
    std::vector<std::uint64_t> out(50), back(50);
    step_batch(in, out, 4);
    inverse_step_batch(out, back, 4);
    EXPECT_EQ(back, in);
}
