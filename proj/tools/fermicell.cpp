// Batch front end for the fermion cellular automaton library.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fermicell/config.h"
#include "fermicell/fock.h"
#include "fermicell/render.h"
#include "fermicell/rng.h"
#include "fermicell/verify.h"
#include "fermicell/version.h"

namespace fs = std::filesystem;
using namespace fermicell;

namespace {

enum Exit { kPass = 0, kInvariantFailure = 1, kConfigError = 2, kBudgetExceeded = 3 };

struct Writer {
    fs::path dir;
    std::string prefix;

    std::string emit(const std::string &suffix, const std::string &contents) const {
        const fs::path p = dir / (prefix + suffix);
        write_file(p.string(), contents);
        return p.string();
    }
};

BitConfig start_config(const RunConfig &c) {
    if (c.initial) {
        return *c.initial;
    }
    Xoshiro256 rng(c.seed);
    return random_config(c.lattice(), rng);
}

Ensemble start_ensemble(const RunConfig &c) {
    if (c.ensemble) {
        return *c.ensemble;
    }
    if (c.input) {
        json j;
        try {
            j = json::parse(read_file(*c.input));
        } catch (const json::parse_error &e) {
            throw ConfigError(*c.input + ": " + e.what());
        }
        Ensemble e = ensemble_from_json(j);
        if (e.spec().sites() != c.sites) {
            throw ConfigError("ensemble file does not match lattice M_x");
        }
        return e;
    }
    if (c.initial) {
        return Ensemble::point_mass(*c.initial, c.lattice());
    }
    Xoshiro256 rng(c.seed);
    return random_ensemble(c.lattice(), c.random_support, rng);
}

int run_trajectory(const RunConfig &c, const Writer &w) {
    const Trajectory traj = trajectory(start_config(c), c.steps);
    std::string configs;
    for (std::size_t t = 0; t < traj.configs.size(); ++t) {
        json j = config_to_json(traj.configs[t]);
        j["t"] = t;
        configs += j.dump() + "\n";
    }
    std::cout << "events: " << traj.events.size() << "\n";
    std::cout << w.emit("_events.jsonl", events_to_jsonl(traj.events)) << "\n";
    std::cout << w.emit("_configs.jsonl", configs) << "\n";
    std::cout << w.emit("_trajectory.svg", render_trajectory(traj)) << "\n";
    return kPass;
}

int run_ensemble(const RunConfig &c, const Writer &w) {
    Ensemble e = start_ensemble(c);
    std::ostringstream table;
    table.precision(17);
    table << "t,support,total,mean_N_R,mean_N_L\n";
    auto row = [&](int t) {
        table << t << ',' << e.support_size() << ',' << e.total() << ','
              << expectation(e, [](const BitConfig &b) { return charge(b, Charge::Right); }) << ','
              << expectation(e, [](const BitConfig &b) { return charge(b, Charge::Left); }) << '\n';
    };
    row(0);
    for (int t = 1; t <= c.steps; ++t) {
        e = ensemble_step(e);
        row(t);
    }
    std::cout << w.emit("_ensemble.json", ensemble_to_json(e).dump(2) + "\n") << "\n";
    std::cout << w.emit("_ensemble.csv", table.str()) << "\n";
    return kPass;
}

int run_wavefunction(const RunConfig &c, const Writer &w) {
    const LatticeSpec spec = c.lattice();
    if (!spec.indexable() || spec.num_configs() > c.max_dim) {
        throw BudgetExceeded("wave function of M_x=" + std::to_string(c.sites) + " exceeds max_dim");
    }
    const StepOperator s = build_step_operator(spec, StepFactor::Full, c.max_dim);
    WaveFunction q = wavefunction_from_ensemble(start_ensemble(c));
    for (int t = 0; t < c.steps; ++t) {
        q = apply_step(s, q);
    }
    std::cout << "norm defect: " << q.norm_defect() << "\n";
    std::cout << w.emit("_wavefunction.json", wavefunction_to_json(q).dump() + "\n") << "\n";
    return q.norm_defect() < c.tolerances.normalization ? kPass : kInvariantFailure;
}

int run_verify(const RunConfig &c, const Writer &w) {
    VerifyContext ctx{c.sites, c.seed, c.max_dim, c.tolerances};
    const auto results = run_suites(ctx, c.suites);
    bool all = true;
    for (const auto &r : results) {
        std::printf("%s %-32s %s\n", r.passed ? "PASS" : "FAIL", r.suite.c_str(), r.detail.c_str());
        all = all && r.passed;
    }
    std::cout << w.emit("_manifest.json", suite_manifest().dump(2) + "\n") << "\n";
    std::cout << w.emit("_verify.json", verify_report(ctx, results).dump(2) + "\n") << "\n";
    return all ? kPass : kInvariantFailure;
}

int run_spectrum(const RunConfig &c, const Writer &w) {
    const LatticeSpec spec = c.lattice();
    std::cout << w.emit("_spectrum.csv", spectrum_csv(spec)) << "\n";
    std::cout << w.emit("_commutator.csv", commutator_csv(spec, c.max_dim)) << "\n";
    return kPass;
}

int run_trotter(const RunConfig &c, const Writer &w) {
    const TrotterScan scan = trotter_width_scan(c.trotter_sites, c.steps, c.trotter_widths);
    std::ostringstream table;
    table.precision(17);
    table << "width,steps,automaton_vs_alternating,automaton_vs_continuum,alternating_vs_continuum\n";
    for (const auto &r : scan.reports) {
        table << r.width << ',' << r.steps << ',' << r.automaton_vs_alternating << ',' << r.automaton_vs_continuum
              << ',' << r.alternating_vs_continuum << '\n';
    }
    std::cout << table.str();
    std::cout << "monotone: " << (scan.monotone ? "yes" : "no") << "\n";
    std::cout << w.emit("_trotter.csv", table.str()) << "\n";
    return scan.monotone ? kPass : kInvariantFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"fermion cellular automaton simulator"};
    app.set_version_flag("--version", std::string(kVersion));
    std::string config_path;
    std::string mode;
    std::string out_dir;
    std::uint64_t seed = 0;
    std::uint64_t max_dim = 0;
    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--mode", mode, "trajectory|ensemble|wavefunction|verify|spectrum|trotter");
    app.add_option("--out", out_dir, "output directory");
    auto *seed_opt = app.add_option("--seed", seed, "seed for random initial conditions");
    auto *dim_opt = app.add_option("--max-dim", max_dim, "dimension budget for dense and exhaustive work");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kConfigError;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = load_run_config(config_path);
        }
        if (!mode.empty()) {
            cfg.mode = parse_mode(mode);
        }
        if (!out_dir.empty()) {
            cfg.output_dir = out_dir;
        }
        if (*seed_opt) {
            cfg.seed = seed;
        }
        if (*dim_opt) {
            cfg.max_dim = max_dim;
        }
        fs::create_directories(cfg.output_dir);
    } catch (const ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const fs::filesystem_error &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    }

    const Writer w{cfg.output_dir, cfg.prefix};
    try {
        switch (cfg.mode) {
            case Mode::Trajectory:
                return run_trajectory(cfg, w);
            case Mode::Ensemble:
                return run_ensemble(cfg, w);
            case Mode::Wavefunction:
                return run_wavefunction(cfg, w);
            case Mode::Verify:
                return run_verify(cfg, w);
            case Mode::Spectrum:
                return run_spectrum(cfg, w);
            case Mode::Trotter:
                return run_trotter(cfg, w);
        }
    } catch (const BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kPass;
}
