#include "fermicell/basis.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fermicell {

namespace {

// Calls `emit(mask_bits)` for every `count`-subset of `positions`.
template <typename F>
void for_each_subset(const std::vector<int> &positions, int count, F &&emit) {
    const int n = static_cast<int>(positions.size());
    if (count < 0 || count > n) {
        return;
    }
    std::vector<int> pick(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        pick[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        emit(pick);
        int i = count - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - count + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < count; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace

Basis::Basis(LatticeSpec spec, std::vector<BitConfig> states, bool full)
    : spec_(spec), states_(std::move(states)), full_(full) {
    if (!full_) {
        lookup_.reserve(states_.size());
        for (std::size_t i = 0; i < states_.size(); ++i) {
            lookup_.emplace(states_[i], i);
        }
    }
}

Basis Basis::full(const LatticeSpec &spec, std::uint64_t max_dim) {
    if (!spec.indexable() || spec.bits() >= 64 || spec.num_configs() > max_dim) {
        throw BudgetExceeded("full configuration space of M_x=" + std::to_string(spec.sites()) +
                             " exceeds the dimension budget " + std::to_string(max_dim));
    }
    const auto n = spec.num_configs();
    std::vector<BitConfig> states;
    states.reserve(n);
    for (std::uint64_t tau = 0; tau < n; ++tau) {
        states.push_back(BitConfig::from_index(tau, spec));
    }
    return Basis(spec, std::move(states), true);
}

Basis Basis::sector(const LatticeSpec &spec, const ChargeSector &charges) {
    std::vector<int> right_bits;
    std::vector<int> left_bits;
    for (int x = 0; x < spec.sites(); ++x) {
        right_bits.push_back(bit_position(x, 0));
        right_bits.push_back(bit_position(x, 1));
        left_bits.push_back(bit_position(x, 2));
        left_bits.push_back(bit_position(x, 3));
    }
    std::vector<BitConfig> states;
    for_each_subset(right_bits, charges.right, [&](const std::vector<int> &rp) {
        BitConfig base(spec.sites());
        for (int i : rp) {
            base.set(right_bits[static_cast<std::size_t>(i)], true);
        }
        for_each_subset(left_bits, charges.left, [&](const std::vector<int> &lp) {
            BitConfig c = base;
            for (int i : lp) {
                c.set(left_bits[static_cast<std::size_t>(i)], true);
            }
            if (!charges.color1_parity || charge(c, Charge::Color1Parity) == *charges.color1_parity) {
                states.push_back(c);
            }
        });
    });
    std::sort(states.begin(), states.end());
    return Basis(spec, std::move(states), false);
}

std::optional<std::size_t> Basis::find(const BitConfig &config) const {
    if (full_) {
        if (config.sites() != spec_.sites()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(config.index());
    }
    auto it = lookup_.find(config);
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

}  // namespace fermicell
