#pragma once

// Direct transcription of the update rule on an occupation table, used as an
// independent oracle for the bit-packed automaton.

#include <array>
#include <string>
#include <vector>

#include "fermicell/lattice.h"

namespace fermicell::replay {

using Table = std::vector<std::array<int, 4>>;  // [x][R1, R2, L1, L2]

struct ReplayEvent {
    int t;
    int x;
    std::string kind;
};

inline Table to_table(const BitConfig &c) {
    Table t(static_cast<std::size_t>(c.sites()));
    for (int x = 0; x < c.sites(); ++x) {
        for (int g = 0; g < 4; ++g) {
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)] = c.occupied(x, g);
        }
    }
    return t;
}

inline BitConfig from_table(const Table &t) {
    BitConfig c(static_cast<int>(t.size()));
    for (std::size_t x = 0; x < t.size(); ++x) {
        for (int g = 0; g < 4; ++g) {
            c.set(bit_position(static_cast<int>(x), g), t[x][static_cast<std::size_t>(g)] != 0);
        }
    }
    return c;
}

/// One step: right movers to x+1, left movers to x-1, then color exchange where a
/// single right mover meets a single left mover.
inline Table replay_step(const Table &in, int t, std::vector<ReplayEvent> *events) {
    const int m = static_cast<int>(in.size());
    Table moved(in.size(), {0, 0, 0, 0});
    for (int x = 0; x < m; ++x) {
        const auto &s = in[static_cast<std::size_t>(x)];
        auto &right = moved[static_cast<std::size_t>((x + 1) % m)];
        auto &left = moved[static_cast<std::size_t>((x - 1 + m) % m)];
        right[0] = s[0];
        right[1] = s[1];
        left[2] = s[2];
        left[3] = s[3];
    }
    for (int x = 0; x < m; ++x) {
        auto &s = moved[static_cast<std::size_t>(x)];
        if (s[0] + s[1] == 1 && s[2] + s[3] == 1) {
            const bool same = s[0] == s[2];  // R1+L1 or R2+L2
            if (events) {
                events->push_back({t, x, same ? "scatter_5_10" : "scatter_9_6"});
            }
            s = {s[1], s[0], s[3], s[2]};
        }
    }
    return moved;
}

inline std::vector<Table> replay(const Table &start, int steps, std::vector<ReplayEvent> *events) {
    std::vector<Table> out{start};
    for (int t = 1; t <= steps; ++t) {
        out.push_back(replay_step(out.back(), t, events));
    }
    return out;
}

}  // namespace fermicell::replay
