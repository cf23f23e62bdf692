#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fermicell/lattice.h"

namespace fermicell {

/// Fixed right-mover count, left-mover count and (optionally) color-1 parity.
struct ChargeSector {
    int right = 0;
    int left = 0;
    std::optional<int> color1_parity;
};

/// An ordered set of configurations spanning either the full space or a
/// conserved-charge block. Position in the list is the row/column index of
/// every matrix built over the basis.
class Basis {
   public:
    /// All 2^(4 M_x) configurations in index order. Throws when the count exceeds `max_dim`.
    static Basis full(const LatticeSpec &spec, std::uint64_t max_dim);
    static Basis sector(const LatticeSpec &spec, const ChargeSector &charges);

    const LatticeSpec &spec() const { return spec_; }
    std::size_t size() const { return states_.size(); }
    const BitConfig &state(std::size_t i) const { return states_[i]; }
    const std::vector<BitConfig> &states() const { return states_; }
    bool is_full() const { return full_; }

    std::optional<std::size_t> find(const BitConfig &config) const;

   private:
    Basis(LatticeSpec spec, std::vector<BitConfig> states, bool full);

    LatticeSpec spec_;
    std::vector<BitConfig> states_;
    std::unordered_map<BitConfig, std::size_t, BitConfigHash> lookup_;
    bool full_;
};

/// Thrown when a request would exceed a configured dimension budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace fermicell
