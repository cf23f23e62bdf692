#include "fermicell/render.h"

#include <cstdio>
#include <string>

#include "fermicell/version.h"

namespace fermicell {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Frame {
    const RenderOptions &o;
    int steps;

    double px(double x) const { return o.margin + x * o.cell; }
    double py(double t) const { return o.margin + (steps - t) * o.cell; }
};

void line(std::string &out, const Frame &f, double x0, double t0, double x1, double t1, const char *cls,
          double offset = 0) {
    out += "<line class=\"";
    out += cls;
    out += "\" x1=\"" + fmt(f.px(x0) + offset) + "\" y1=\"" + fmt(f.py(t0)) + "\" x2=\"" + fmt(f.px(x1) + offset) +
           "\" y2=\"" + fmt(f.py(t1)) + "\"/>\n";
}

// Segment from (x, t) to (x + dx, t + 1), split where it leaves [0, sites - 1].
void mover_segment(std::string &out, const Frame &f, int sites, int x, int t, int dx, const char *cls,
                   double offset = 0) {
    const int target = x + dx;
    if (target >= 0 && target < sites) {
        line(out, f, x, t, target, t + 1, cls, offset);
        return;
    }
    const double edge = dx > 0 ? x + 0.5 : x - 0.5;
    const int wrapped = target < 0 ? target + sites : target - sites;
    const double entry = dx > 0 ? wrapped - 0.5 : wrapped + 0.5;
    line(out, f, x, t, edge, t + 0.5, cls, offset);
    line(out, f, entry, t + 0.5, wrapped, t + 1, cls, offset);
}

}  // namespace

std::string render_trajectory(const Trajectory &traj, const RenderOptions &opts) {
    const int steps = traj.configs.empty() ? 0 : static_cast<int>(traj.configs.size()) - 1;
    const int sites = traj.configs.empty() ? 0 : traj.configs.front().sites();
    const Frame f{opts, steps};
    const double width = 2 * opts.margin + (sites > 0 ? (sites - 1) * opts.cell : 0);
    const double height = 2 * opts.margin + steps * opts.cell;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (opts.version_comment) {
        out += std::string("<!-- fermicell ") + kVersion + " -->\n";
    }
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" data-sites=\"" + std::to_string(sites) + "\" data-steps=\"" + std::to_string(steps) + "\">\n";
    if (!traj.configs.empty()) {
        out += "<style>line.color1{stroke:#d62728;stroke-width:1.5}line.color2{stroke:#2ca02c;stroke-width:4}"
               "line.double{stroke:#444;stroke-width:1.5}rect.scatter{fill:none;stroke:#000;stroke-width:1.5}"
               "</style>\n";
        out += "<g class=\"movers\">\n";
        for (int t = 0; t < steps; ++t) {
            const BitConfig &c = traj.configs[static_cast<std::size_t>(t)];
            for (int x = 0; x < sites; ++x) {
                const Nibble n = local_nibble(c, x);
                for (int mover = 0; mover < 2; ++mover) {
                    const int dx = mover == 0 ? 1 : -1;
                    const bool c1 = n.occupied(2 * mover);
                    const bool c2 = n.occupied(2 * mover + 1);
                    if (c1 && c2) {
                        mover_segment(out, f, sites, x, t, dx, "double", -2.5);
                        mover_segment(out, f, sites, x, t, dx, "double", 2.5);
                    } else if (c1) {
                        mover_segment(out, f, sites, x, t, dx, "color1");
                    } else if (c2) {
                        mover_segment(out, f, sites, x, t, dx, "color2");
                    }
                }
            }
        }
        out += "</g>\n<g class=\"events\">\n";
        const double half = opts.cell / 6;
        for (const auto &ev : traj.events) {
            out += "<rect class=\"scatter\" data-t=\"" + std::to_string(ev.t) + "\" data-x=\"" +
                   std::to_string(ev.x) + "\" data-kind=\"" + scatter_kind_name(ev.kind) + "\" x=\"" +
                   fmt(f.px(ev.x) - half) + "\" y=\"" + fmt(f.py(ev.t) - half) + "\" width=\"" + fmt(2 * half) +
                   "\" height=\"" + fmt(2 * half) + "\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace fermicell
