#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fermicell/automaton.h"
#include "fermicell/evolution.h"
#include "fermicell/version.h"

namespace fermicell {

using json = nlohmann::json;

/// Thrown for malformed configuration or input files.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

json config_to_json(const BitConfig &config);
BitConfig config_from_json(const json &j);

json ensemble_to_json(const Ensemble &e);
Ensemble ensemble_from_json(const json &j);

/// One {"t","x","kind"} object per line.
std::string events_to_jsonl(const std::vector<TrajectoryEvent> &events);

json wavefunction_to_json(const WaveFunction &q);

/// Columns species,k,phase.
std::string spectrum_csv(const LatticeSpec &spec);

/// Columns sector,residual: max |[S, T]| entry on the full space and on every (N_R, N_L) block.
std::string commutator_csv(const LatticeSpec &spec, std::uint64_t max_dim);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

}  // namespace fermicell
