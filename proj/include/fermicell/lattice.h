#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace fermicell {

inline constexpr int kSpeciesCount = 4;
inline constexpr int kMaxSites = 64;
inline constexpr int kWordBits = 64;
inline constexpr int kMaxWords = kMaxSites * kSpeciesCount / kWordBits;

enum class Mover : std::uint8_t { R, L };
enum class Color : std::uint8_t { One, Two };

/// One of the four fermion species. The linear index is 0=R1, 1=R2, 2=L1, 3=L2.
struct Species {
    Mover mover;
    Color color;

    constexpr int index() const {
        return (mover == Mover::R ? 0 : 2) + (color == Color::One ? 0 : 1);
    }
    static constexpr Species from_index(int gamma) {
        return Species{gamma < 2 ? Mover::R : Mover::L, (gamma & 1) ? Color::Two : Color::One};
    }
    std::string name() const;

    friend constexpr bool operator==(Species, Species) = default;
};

inline constexpr Species kR1{Mover::R, Color::One};
inline constexpr Species kR2{Mover::R, Color::Two};
inline constexpr Species kL1{Mover::L, Color::One};
inline constexpr Species kL2{Mover::L, Color::Two};

/// Periodic chain of `sites` points with spacing `epsilon`.
class LatticeSpec {
   public:
    explicit LatticeSpec(int sites, double epsilon = 1.0);

    int sites() const { return sites_; }
    double epsilon() const { return epsilon_; }
    int bits() const { return kSpeciesCount * sites_; }

    /// True when every configuration fits in a single 64-bit index.
    bool indexable() const { return bits() <= kWordBits; }
    /// Number of configurations 2^(4 M_x). Throws when it does not fit in 64 bits.
    std::uint64_t num_configs() const;

    int wrap(int x) const {
        int r = x % sites_;
        return r < 0 ? r + sites_ : r;
    }

    friend bool operator==(const LatticeSpec &, const LatticeSpec &) = default;

   private:
    int sites_;
    double epsilon_;
};

constexpr int bit_position(int x, int gamma) { return kSpeciesCount * x + gamma; }
constexpr int bit_position(int x, Species s) { return bit_position(x, s.index()); }

/// The four occupation numbers at one site, packed as n_R1 + 2 n_R2 + 4 n_L1 + 8 n_L2.
struct Nibble {
    std::uint8_t value = 0;

    bool occupied(int gamma) const { return (value >> gamma) & 1; }
    int right_count() const { return occupied(0) + occupied(1); }
    int left_count() const { return occupied(2) + occupied(3); }
    std::array<int, 4> occupations() const {
        return {occupied(0), occupied(1), occupied(2), occupied(3)};
    }
    friend bool operator==(Nibble, Nibble) = default;
};

/// A classical bit configuration on 4 M_x bits; bit b(x, gamma) = 4x + gamma.
class BitConfig {
   public:
    explicit BitConfig(int sites);

    /// Configuration with index tau = sum_b n_b 2^b. Requires an indexable lattice.
    static BitConfig from_index(std::uint64_t tau, const LatticeSpec &spec);
    /// Parses "0110..." with bit 0 first. Length must be a multiple of four.
    static BitConfig from_bit_string(std::string_view bits);

    std::uint64_t index() const;
    std::string to_bit_string() const;

    int sites() const { return sites_; }
    int bits() const { return kSpeciesCount * sites_; }

    bool get(int bit) const { return (words_[bit >> 6] >> (bit & 63)) & 1; }
    void set(int bit, bool value);
    void flip(int bit) { words_[bit >> 6] ^= std::uint64_t{1} << (bit & 63); }

    bool occupied(int x, int gamma) const { return get(bit_position(x, gamma)); }
    bool occupied(int x, Species s) const { return occupied(x, s.index()); }

    /// Number of occupied bits strictly below `bit` (the Jordan-Wigner string length).
    int count_below(int bit) const;
    int popcount() const;

    std::span<const std::uint64_t> words() const { return {words_.data(), num_words()}; }
    std::span<std::uint64_t> mutable_words() { return {words_.data(), num_words()}; }
    std::size_t num_words() const { return static_cast<std::size_t>((bits() + kWordBits - 1) / kWordBits); }

    friend bool operator==(const BitConfig &, const BitConfig &) = default;
    friend auto operator<=>(const BitConfig &a, const BitConfig &b) {
        if (auto c = a.sites_ <=> b.sites_; c != 0) {
            return c;
        }
        for (int w = kMaxWords - 1; w >= 0; --w) {
            if (auto c = a.words_[w] <=> b.words_[w]; c != 0) {
                return c;
            }
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const;

   private:
    int sites_;
    std::array<std::uint64_t, kMaxWords> words_{};
};

struct BitConfigHash {
    std::size_t operator()(const BitConfig &c) const { return c.hash(); }
};

/// Four bits of site x in canonical species order.
Nibble local_nibble(const BitConfig &config, int x);
void set_nibble(BitConfig &config, int x, Nibble n);

enum class Charge { Total, Right, Left, Color1Parity };

int charge(const BitConfig &config, Charge which);

/// Site relabeling x -> x + shift (mod M_x) applied to every species.
BitConfig translate(const BitConfig &config, int shift);

}  // namespace fermicell
