#pragma once

#include <cstdint>

#include "fermicell/automaton.h"

namespace fermicell {

/// splitmix64 step; used to expand a 64-bit seed into generator state.
std::uint64_t splitmix64(std::uint64_t &state);

/// xoshiro256** 1.0 (Blackman and Vigna), seeded by four splitmix64 outputs.
class Xoshiro256 {
   public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();
    std::uint64_t operator()() { return next(); }
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform();
    /// Uniform integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

   private:
    std::uint64_t s_[4];
};

/// Ensemble on `support` distinct configurations with weights u_i / sum u, u_i uniform in (0, 1].
Ensemble random_ensemble(const LatticeSpec &spec, std::size_t support, Xoshiro256 &rng);
BitConfig random_config(const LatticeSpec &spec, Xoshiro256 &rng);

}  // namespace fermicell
