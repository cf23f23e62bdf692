#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fermicell/kernels.h"

namespace fermicell {

namespace {

void step_scalar(const std::uint64_t *in, std::uint64_t *out, std::size_t n, int sites) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = swar::step(in[i], sites);
    }
}

void inverse_step_scalar(const std::uint64_t *in, std::uint64_t *out, std::size_t n, int sites) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = swar::inverse_step(in[i], sites);
    }
}

void interaction_scalar(const std::uint64_t *in, std::uint64_t *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = swar::interaction(in[i]);
    }
}

void gather_scalar(const double *src, const std::uint64_t *index, double *dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = src[index[i]];
    }
}

constexpr StepKernels kScalar{Isa::Scalar, step_scalar, inverse_step_scalar, interaction_scalar, gather_scalar};

const StepKernels &select_kernels() {
    if (const char *forced = std::getenv("FERMICELL_ISA")) {
        std::string want(forced);
        for (auto isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
            if (want == isa_name(isa)) {
                if (auto *k = kernels_for(isa)) {
                    return *k;
                }
            }
        }
    }
    if (auto *k = kernels_for(Isa::Avx2)) {
        return *k;
    }
    if (auto *k = kernels_for(Isa::Neon)) {
        return *k;
    }
    return kScalar;
}

void rotate_left_nibble(std::span<std::uint64_t> words, int bits) {
    std::uint64_t carry = 0;
    for (auto &w : words) {
        std::uint64_t next = w >> 60;
        w = (w << 4) | carry;
        carry = next;
    }
    std::uint64_t wrapped;
    if (bits % 64 == 0) {
        wrapped = carry;
    } else {
        int p = bits % 64;
        auto &last = words.back();
        wrapped = (last >> p) & 0xF;
        last &= (std::uint64_t{1} << p) - 1;
    }
    words.front() |= wrapped;
}

void rotate_right_nibble(std::span<std::uint64_t> words, int bits) {
    std::uint64_t low = words.front() & 0xF;
    for (std::size_t i = 0; i < words.size(); ++i) {
        words[i] = (words[i] >> 4) | (i + 1 < words.size() ? words[i + 1] << 60 : 0);
    }
    int pos = bits - 4;
    words[static_cast<std::size_t>(pos >> 6)] |= low << (pos & 63);
}

void split_rotate(std::span<std::uint64_t> words, int sites, bool forward) {
    std::array<std::uint64_t, 4> right{};
    std::array<std::uint64_t, 4> left{};
    const std::size_t n = words.size();
    for (std::size_t i = 0; i < n; ++i) {
        right[i] = words[i] & swar::kRightMask;
        left[i] = words[i] & swar::kLeftMask;
    }
    std::span<std::uint64_t> r(right.data(), n);
    std::span<std::uint64_t> l(left.data(), n);
    const int bits = 4 * sites;
    if (forward) {
        rotate_left_nibble(r, bits);
        rotate_right_nibble(l, bits);
    } else {
        rotate_right_nibble(r, bits);
        rotate_left_nibble(l, bits);
    }
    for (std::size_t i = 0; i < n; ++i) {
        words[i] = right[i] | left[i];
    }
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "unknown";
}

const StepKernels *kernels_for(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return &kScalar;
        case Isa::Avx2:
            return detail::avx2_kernels();
        case Isa::Neon:
            return detail::neon_kernels();
    }
    return nullptr;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (auto isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (kernels_for(isa) != nullptr) {
            out.push_back(isa);
        }
    }
    return out;
}

const StepKernels &active_kernels() {
    static const StepKernels &k = select_kernels();
    return k;
}

namespace {
void check_batch(std::size_t in, std::size_t out, int sites) {
    if (in != out) {
        throw std::invalid_argument("batch kernels need equally sized input and output");
    }
    if (sites < 1 || sites > 16) {
        throw std::invalid_argument("single-word kernels need 1 <= M_x <= 16");
    }
}
}  // namespace

void step_batch(std::span<const std::uint64_t> in, std::span<std::uint64_t> out, int sites) {
    check_batch(in.size(), out.size(), sites);
    active_kernels().step(in.data(), out.data(), in.size(), sites);
}

void inverse_step_batch(std::span<const std::uint64_t> in, std::span<std::uint64_t> out, int sites) {
    check_batch(in.size(), out.size(), sites);
    active_kernels().inverse_step(in.data(), out.data(), in.size(), sites);
}

void gather(std::span<const double> src, std::span<const std::uint64_t> index, std::span<double> dst) {
    if (index.size() != dst.size()) {
        throw std::invalid_argument("gather: index and destination sizes differ");
    }
    active_kernels().gather(src.data(), index.data(), dst.data(), dst.size());
}

namespace swar {

void transport_words(std::span<std::uint64_t> words, int sites) { split_rotate(words, sites, true); }

void inverse_transport_words(std::span<std::uint64_t> words, int sites) { split_rotate(words, sites, false); }

void interaction_words(std::span<std::uint64_t> words) {
    for (auto &w : words) {
        w = interaction(w);
    }
}

}  // namespace swar

}  // namespace fermicell
