#include <immintrin.h>

#include "fermicell/kernels.h"

namespace fermicell {

namespace {

inline __m256i interaction4(__m256i w) {
    const __m256i low = _mm256_set1_epi64x(static_cast<long long>(swar::kNibbleLow));
    __m256i r = _mm256_xor_si256(w, _mm256_srli_epi64(w, 1));
    __m256i l = _mm256_xor_si256(_mm256_srli_epi64(w, 2), _mm256_srli_epi64(w, 3));
    __m256i scatter = _mm256_and_si256(_mm256_and_si256(r, l), low);
    // scatter * 15 without a 64-bit multiply.
    __m256i fill = _mm256_sub_epi64(_mm256_slli_epi64(scatter, 4), scatter);
    return _mm256_xor_si256(w, fill);
}

struct Shifts {
    __m256i right_mask;
    __m256i left_mask;
    __m256i full;
    __m128i top;
};

inline Shifts make_shifts(int sites) {
    return Shifts{_mm256_set1_epi64x(static_cast<long long>(swar::kRightMask)),
                  _mm256_set1_epi64x(static_cast<long long>(swar::kLeftMask)),
                  _mm256_set1_epi64x(static_cast<long long>(swar::word_mask(sites))),
                  _mm_cvtsi32_si128(4 * sites - 4)};
}

inline __m256i transport4(__m256i w, const Shifts &s, bool forward) {
    __m256i r = _mm256_and_si256(w, s.right_mask);
    __m256i l = _mm256_and_si256(w, s.left_mask);
    __m256i up_r = _mm256_or_si256(_mm256_slli_epi64(r, 4), _mm256_srl_epi64(r, s.top));
    __m256i down_r = _mm256_or_si256(_mm256_srli_epi64(r, 4), _mm256_sll_epi64(r, s.top));
    __m256i up_l = _mm256_or_si256(_mm256_slli_epi64(l, 4), _mm256_srl_epi64(l, s.top));
    __m256i down_l = _mm256_or_si256(_mm256_srli_epi64(l, 4), _mm256_sll_epi64(l, s.top));
    __m256i moved = forward ? _mm256_or_si256(up_r, down_l) : _mm256_or_si256(down_r, up_l);
    return _mm256_and_si256(moved, s.full);
}

void step_avx2(const std::uint64_t *in, std::uint64_t *out, std::size_t n, int sites) {
    const Shifts s = make_shifts(sites);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(in + i));
        w = interaction4(transport4(w, s, true));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + i), w);
    }
    for (; i < n; ++i) {
        out[i] = swar::step(in[i], sites);
    }
}

void inverse_step_avx2(const std::uint64_t *in, std::uint64_t *out, std::size_t n, int sites) {
    const Shifts s = make_shifts(sites);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(in + i));
        w = transport4(interaction4(w), s, false);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + i), w);
    }
    for (; i < n; ++i) {
        out[i] = swar::inverse_step(in[i], sites);
    }
}

void interaction_avx2(const std::uint64_t *in, std::uint64_t *out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(in + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + i), interaction4(w));
    }
    for (; i < n; ++i) {
        out[i] = swar::interaction(in[i]);
    }
}

void gather_avx2(const double *src, const std::uint64_t *index, double *dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(index + i));
        _mm256_storeu_pd(dst + i, _mm256_i64gather_pd(src, idx, 8));
    }
    for (; i < n; ++i) {
        dst[i] = src[index[i]];
    }
}

constexpr StepKernels kAvx2{Isa::Avx2, step_avx2, inverse_step_avx2, interaction_avx2, gather_avx2};

}  // namespace

namespace detail {
const StepKernels *avx2_kernels() { return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr; }
}  // namespace detail

}  // namespace fermicell
