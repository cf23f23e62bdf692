#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermicell/io.h"

namespace fermicell {

enum class Mode { Trajectory, Ensemble, Wavefunction, Verify, Spectrum, Trotter };

std::string mode_name(Mode m);
/// Throws ConfigError for unknown names.
Mode parse_mode(const std::string &name);

/// Every floating tolerance used by the verify suites and the CLI.
struct Tolerances {
    double probability = 1e-12;     // ensemble vs squared wave function
    double round_trip = 1e-10;      // exp(-i eps H) vs S
    double schrodinger = 1e-9;      // continuous evolution vs automaton steps
    double operator_match = 1e-12;  // Fock operators vs permutations
    double anticommutator = 1e-14;
    double phase = 1e-12;
    double normalization = 1e-12;
};

json tolerances_to_json(const Tolerances &t);

struct RunConfig {
    int schema = kConfigSchemaVersion;
    Mode mode = Mode::Verify;
    int sites = 2;
    double epsilon = 1.0;
    int steps = 10;
    std::uint64_t seed = 1;
    std::optional<BitConfig> initial;       // trajectory / wavefunction start
    std::optional<std::string> input;       // ensemble JSON file
    std::optional<Ensemble> ensemble;       // inline ensemble
    std::size_t random_support = 8;         // support of the seeded random ensemble
    std::string output_dir = ".";
    std::string prefix = "run";
    std::uint64_t max_dim = 65536;
    Tolerances tolerances;
    std::vector<double> trotter_widths{2, 4, 8};
    int trotter_sites = 32;
    std::vector<std::string> suites;        // verify: empty means all

    LatticeSpec lattice() const { return LatticeSpec(sites, epsilon); }
};

/// Parses a versioned configuration object. Unknown keys anywhere are rejected.
RunConfig parse_run_config(const json &j);
RunConfig load_run_config(const std::string &path);
json run_config_to_json(const RunConfig &c);

}  // namespace fermicell
