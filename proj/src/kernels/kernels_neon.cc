#include <arm_neon.h>

#include "fermicell/kernels.h"

namespace fermicell {

namespace {

inline uint64x2_t interaction2(uint64x2_t w) {
    const uint64x2_t low = vdupq_n_u64(swar::kNibbleLow);
    uint64x2_t r = veorq_u64(w, vshrq_n_u64(w, 1));
    uint64x2_t l = veorq_u64(vshrq_n_u64(w, 2), vshrq_n_u64(w, 3));
    uint64x2_t scatter = vandq_u64(vandq_u64(r, l), low);
    return veorq_u64(w, vsubq_u64(vshlq_n_u64(scatter, 4), scatter));
}

inline uint64x2_t transport2(uint64x2_t w, int sites, bool forward) {
    const uint64x2_t rmask = vdupq_n_u64(swar::kRightMask);
    const uint64x2_t lmask = vdupq_n_u64(swar::kLeftMask);
    const uint64x2_t full = vdupq_n_u64(swar::word_mask(sites));
    const int64x2_t up_top = vdupq_n_s64(4 * sites - 4);
    const int64x2_t down_top = vdupq_n_s64(-(4 * sites - 4));
    uint64x2_t r = vandq_u64(w, rmask);
    uint64x2_t l = vandq_u64(w, lmask);
    uint64x2_t moved;
    if (forward) {
        moved = vorrq_u64(vorrq_u64(vshlq_n_u64(r, 4), vshlq_u64(r, down_top)),
                          vorrq_u64(vshrq_n_u64(l, 4), vshlq_u64(l, up_top)));
    } else {
        moved = vorrq_u64(vorrq_u64(vshrq_n_u64(r, 4), vshlq_u64(r, up_top)),
                          vorrq_u64(vshlq_n_u64(l, 4), vshlq_u64(l, down_top)));
    }
    return vandq_u64(moved, full);
}

void step_neon(const std::uint64_t *in, std::uint64_t *out, std::size_t n, int sites) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(out + i, interaction2(transport2(vld1q_u64(in + i), sites, true)));
    }
    for (; i < n; ++i) {
        out[i] = swar::step(in[i], sites);
    }
}

void inverse_step_neon(const std::uint64_t *in, std::uint64_t *out, std::size_t n, int sites) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(out + i, transport2(interaction2(vld1q_u64(in + i)), sites, false));
    }
    for (; i < n; ++i) {
        out[i] = swar::inverse_step(in[i], sites);
    }
}

void interaction_neon(const std::uint64_t *in, std::uint64_t *out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(out + i, interaction2(vld1q_u64(in + i)));
    }
    for (; i < n; ++i) {
        out[i] = swar::interaction(in[i]);
    }
}

// No hardware gather on NEON; the scalar loop is already memory bound.
void gather_neon(const double *src, const std::uint64_t *index, double *dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = src[index[i]];
    }
}

constexpr StepKernels kNeon{Isa::Neon, step_neon, inverse_step_neon, interaction_neon, gather_neon};

}  // namespace

namespace detail {
const StepKernels *neon_kernels() { return &kNeon; }
}  // namespace detail

}  // namespace fermicell
