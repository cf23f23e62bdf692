#include "fermicell/rng.h"

#include <map>
#include <stdexcept>

namespace fermicell {

namespace {
constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto &s : s_) {
        s = splitmix64(seed);
    }
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Xoshiro256::below: bound must be positive");
    }
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

BitConfig random_config(const LatticeSpec &spec, Xoshiro256 &rng) {
    BitConfig c(spec.sites());
    for (int b = 0; b < spec.bits(); ++b) {
        c.set(b, rng.next() >> 63);
    }
    return c;
}

Ensemble random_ensemble(const LatticeSpec &spec, std::size_t support, Xoshiro256 &rng) {
    if (spec.indexable() && spec.bits() < 64 && support > spec.num_configs()) {
        throw std::invalid_argument("random_ensemble: support exceeds the number of configurations");
    }
    std::map<BitConfig, double> w;
    double total = 0;
    while (w.size() < support) {
        const BitConfig c = random_config(spec, rng);
        if (w.count(c) != 0) {
            continue;
        }
        const double u = 1.0 - rng.uniform();
        w.emplace(c, u);
        total += u;
    }
    for (auto &[c, p] : w) {
        p /= total;
    }
    return Ensemble(spec, std::move(w));
}

}  // namespace fermicell
