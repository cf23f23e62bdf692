#pragma once

// Data-parallel inner loops of the automaton: batched bit-packed steps on
// single-word configurations (M_x <= 16) and the permutation gather used to
// apply unique jump operators to wave functions.
//
// Every kernel has a scalar reference implementation. SIMD variants (AVX2 on
// x86-64, NEON on aarch64) are compiled when the target supports them and
// chosen at runtime; tests check every available variant against the scalar
// one bit-for-bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fermicell {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

struct StepKernels {
    Isa isa;
    /// out[i] = automaton_step(in[i]) for single-word configurations on `sites` sites.
    void (*step)(const std::uint64_t *in, std::uint64_t *out, std::size_t n, int sites);
    /// out[i] = inverse_step(in[i]).
    void (*inverse_step)(const std::uint64_t *in, std::uint64_t *out, std::size_t n, int sites);
    /// out[i] = interaction_step(in[i]); independent of the site count.
    void (*interaction)(const std::uint64_t *in, std::uint64_t *out, std::size_t n);
    /// dst[i] = src[index[i]].
    void (*gather)(const double *src, const std::uint64_t *index, double *dst, std::size_t n);
};

/// Kernels picked for this machine. FERMICELL_ISA=scalar|avx2|neon overrides the choice
/// when the requested variant is available.
const StepKernels &active_kernels();

/// Kernel set for a specific ISA, or nullptr when it is not compiled in or not supported by the CPU.
const StepKernels *kernels_for(Isa isa);

std::vector<Isa> available_isas();

void step_batch(std::span<const std::uint64_t> in, std::span<std::uint64_t> out, int sites);
void inverse_step_batch(std::span<const std::uint64_t> in, std::span<std::uint64_t> out, int sites);
void gather(std::span<const double> src, std::span<const std::uint64_t> index, std::span<double> dst);

namespace swar {

inline constexpr std::uint64_t kRightMask = 0x3333333333333333ULL;
inline constexpr std::uint64_t kLeftMask = 0xCCCCCCCCCCCCCCCCULL;
inline constexpr std::uint64_t kNibbleLow = 0x1111111111111111ULL;

constexpr std::uint64_t word_mask(int sites) {
    return sites >= 16 ? ~std::uint64_t{0} : (std::uint64_t{1} << (4 * sites)) - 1;
}

/// Flips every nibble that holds exactly one right mover and exactly one left mover.
/// Those are precisely 9 <-> 6 and 5 <-> 10; every other nibble value is fixed.
constexpr std::uint64_t interaction(std::uint64_t w) {
    std::uint64_t scatter = (w ^ (w >> 1)) & ((w >> 2) ^ (w >> 3)) & kNibbleLow;
    return w ^ (scatter * 15);
}

/// Right movers advance one site, left movers retreat one site (periodic).
constexpr std::uint64_t transport(std::uint64_t w, int sites) {
    const int top = 4 * sites - 4;
    const std::uint64_t full = word_mask(sites);
    std::uint64_t r = w & kRightMask;
    std::uint64_t l = w & kLeftMask;
    r = ((r << 4) | (r >> top)) & full;
    l = ((l >> 4) | (l << top)) & full;
    return r | l;
}

constexpr std::uint64_t inverse_transport(std::uint64_t w, int sites) {
    const int top = 4 * sites - 4;
    const std::uint64_t full = word_mask(sites);
    std::uint64_t r = w & kRightMask;
    std::uint64_t l = w & kLeftMask;
    r = ((r >> 4) | (r << top)) & full;
    l = ((l << 4) | (l >> top)) & full;
    return r | l;
}

constexpr std::uint64_t step(std::uint64_t w, int sites) { return interaction(transport(w, sites)); }
constexpr std::uint64_t inverse_step(std::uint64_t w, int sites) { return inverse_transport(interaction(w), sites); }

/// Multi-word variants on a little-endian word array holding 4*sites bits.
void transport_words(std::span<std::uint64_t> words, int sites);
void inverse_transport_words(std::span<std::uint64_t> words, int sites);
void interaction_words(std::span<std::uint64_t> words);

}  // namespace swar

namespace detail {
const StepKernels *avx2_kernels();
const StepKernels *neon_kernels();
}  // namespace detail

}  // namespace fermicell
