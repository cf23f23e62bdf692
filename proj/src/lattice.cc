#include "fermicell/lattice.h"

#include <bit>
#include <stdexcept>

namespace fermicell {

std::string Species::name() const {
    std::string s = mover == Mover::R ? "R" : "L";
    s += color == Color::One ? "1" : "2";
    return s;
}

LatticeSpec::LatticeSpec(int sites, double epsilon) : sites_(sites), epsilon_(epsilon) {
    if (sites < 1 || sites > kMaxSites) {
        throw std::invalid_argument("M_x must lie in [1, " + std::to_string(kMaxSites) + "], got " + std::to_string(sites));
    }
    if (!(epsilon > 0)) {
        throw std::invalid_argument("lattice spacing epsilon must be positive");
    }
}

std::uint64_t LatticeSpec::num_configs() const {
    if (bits() >= kWordBits) {
        throw std::out_of_range("2^(4 M_x) configurations do not fit in a 64-bit count");
    }
    return std::uint64_t{1} << bits();
}

BitConfig::BitConfig(int sites) : sites_(sites) {
    if (sites < 1 || sites > kMaxSites) {
        throw std::invalid_argument("BitConfig: site count out of range");
    }
}

BitConfig BitConfig::from_index(std::uint64_t tau, const LatticeSpec &spec) {
    if (!spec.indexable()) {
        throw std::out_of_range("configuration index requires 4 M_x <= 64");
    }
    if (spec.bits() < kWordBits && (tau >> spec.bits()) != 0) {
        throw std::out_of_range("configuration index " + std::to_string(tau) + " out of range for M_x=" +
                                std::to_string(spec.sites()));
    }
    BitConfig c(spec.sites());
    c.words_[0] = tau;
    return c;
}

BitConfig BitConfig::from_bit_string(std::string_view bits) {
    if (bits.empty() || bits.size() % kSpeciesCount != 0) {
        throw std::invalid_argument("bit string length must be a positive multiple of 4");
    }
    BitConfig c(static_cast<int>(bits.size() / kSpeciesCount));
    for (std::size_t b = 0; b < bits.size(); ++b) {
        if (bits[b] == '1') {
            c.set(static_cast<int>(b), true);
        } else if (bits[b] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return c;
}

std::uint64_t BitConfig::index() const {
    if (bits() > kWordBits) {
        throw std::out_of_range("configuration index requires 4 M_x <= 64");
    }
    return words_[0];
}

std::string BitConfig::to_bit_string() const {
    std::string s(static_cast<std::size_t>(bits()), '0');
    for (int b = 0; b < bits(); ++b) {
        if (get(b)) {
            s[static_cast<std::size_t>(b)] = '1';
        }
    }
    return s;
}

void BitConfig::set(int bit, bool value) {
    auto mask = std::uint64_t{1} << (bit & 63);
    if (value) {
        words_[bit >> 6] |= mask;
    } else {
        words_[bit >> 6] &= ~mask;
    }
}

int BitConfig::count_below(int bit) const {
    int total = 0;
    int w = bit >> 6;
    for (int k = 0; k < w; ++k) {
        total += std::popcount(words_[k]);
    }
    auto low = (bit & 63) == 0 ? std::uint64_t{0} : words_[w] & ((std::uint64_t{1} << (bit & 63)) - 1);
    return total + std::popcount(low);
}

int BitConfig::popcount() const {
    int total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

std::size_t BitConfig::hash() const {
    std::size_t h = static_cast<std::size_t>(sites_);
    for (auto w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Nibble local_nibble(const BitConfig &config, int x) {
    if (x < 0 || x >= config.sites()) {
        throw std::out_of_range("site index out of range");
    }
    int b = bit_position(x, 0);
    auto w = config.words()[static_cast<std::size_t>(b >> 6)];
    return Nibble{static_cast<std::uint8_t>((w >> (b & 63)) & 0xF)};
}

void set_nibble(BitConfig &config, int x, Nibble n) {
    if (x < 0 || x >= config.sites()) {
        throw std::out_of_range("site index out of range");
    }
    int b = bit_position(x, 0);
    auto &w = config.mutable_words()[static_cast<std::size_t>(b >> 6)];
    w = (w & ~(std::uint64_t{0xF} << (b & 63))) | (std::uint64_t{n.value} << (b & 63));
}

int charge(const BitConfig &config, Charge which) {
    // Species masks repeated over every nibble of a word.
    constexpr std::uint64_t kRight = 0x3333333333333333ULL;
    constexpr std::uint64_t kLeft = 0xCCCCCCCCCCCCCCCCULL;
    constexpr std::uint64_t kColor1 = 0x5555555555555555ULL;
    std::uint64_t mask = ~std::uint64_t{0};
    switch (which) {
        case Charge::Total:
            break;
        case Charge::Right:
            mask = kRight;
            break;
        case Charge::Left:
            mask = kLeft;
            break;
        case Charge::Color1Parity:
            mask = kColor1;
            break;
    }
    int total = 0;
    for (auto w : config.words()) {
        total += std::popcount(w & mask);
    }
    return which == Charge::Color1Parity ? (total & 1) : total;
}

BitConfig translate(const BitConfig &config, int shift) {
    BitConfig out(config.sites());
    int m = config.sites();
    for (int x = 0; x < m; ++x) {
        int y = ((x + shift) % m + m) % m;
        set_nibble(out, y, local_nibble(config, x));
    }
    return out;
}

}  // namespace fermicell
