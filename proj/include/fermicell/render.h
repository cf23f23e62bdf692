#pragma once

#include <string>

#include "fermicell/automaton.h"

namespace fermicell {

struct RenderOptions {
    double cell = 32;    // pixels per site and per step
    double margin = 24;
    bool version_comment = true;
};

/// SVG space-time diagram: x runs to the right, t runs upward.
///
/// Each occupied mover between configs[t] and configs[t+1] is a segment of
/// slope +-1. Color 1 is a thin red line, color 2 a thick green line, and a
/// site holding both colors of the same mover is a pair of parallel lines.
/// Segments crossing the periodic boundary are split at the edge. Every scatter
/// event is a square <rect class="scatter"> centered on its (t, x).
std::string render_trajectory(const Trajectory &traj, const RenderOptions &opts = {});

}  // namespace fermicell
