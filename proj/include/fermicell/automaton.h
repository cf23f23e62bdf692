#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fermicell/lattice.h"

namespace fermicell {

inline BitConfig config_from_index(std::uint64_t tau, const LatticeSpec &spec) {
    return BitConfig::from_index(tau, spec);
}
inline std::uint64_t index_of(const BitConfig &config) { return config.index(); }

/// Transport half-step: n_Ra(x+1) <- n_Ra(x), n_La(x-1) <- n_La(x).
BitConfig free_step(const BitConfig &config);
BitConfig inverse_free_step(const BitConfig &config);

/// Scatter half-step: at every site the nibbles 9 <-> 6 and 5 <-> 10 are exchanged.
/// This is an involution.
BitConfig interaction_step(const BitConfig &config);

/// One automaton step of duration epsilon: transport followed by scatter.
BitConfig automaton_step(const BitConfig &config);
BitConfig inverse_step(const BitConfig &config);

enum class ScatterKind { Swap9and6, Swap5and10 };

std::string scatter_kind_name(ScatterKind kind);

struct TrajectoryEvent {
    int t;  // index of the configuration produced by the scatter, in units of epsilon
    int x;
    ScatterKind kind;
    Nibble before;
    Nibble after;

    friend bool operator==(const TrajectoryEvent &, const TrajectoryEvent &) = default;
};

struct Trajectory {
    std::vector<BitConfig> configs;
    std::vector<TrajectoryEvent> events;
};

/// configs[k] = automaton_step^k(start); every nontrivial nibble swap is logged.
Trajectory trajectory(const BitConfig &start, int n_steps);

/// Probability distribution over configurations, stored on its support.
class Ensemble {
   public:
    explicit Ensemble(LatticeSpec spec);
    Ensemble(LatticeSpec spec, std::map<BitConfig, double> weights);

    static Ensemble point_mass(const BitConfig &config, const LatticeSpec &spec);
    /// Uniform weight on every configuration; requires an indexable lattice.
    static Ensemble uniform(const LatticeSpec &spec);

    const LatticeSpec &spec() const { return spec_; }
    const std::map<BitConfig, double> &weights() const { return weights_; }
    std::size_t support_size() const { return weights_.size(); }
    double probability(const BitConfig &config) const;
    double total() const;

    /// Throws when a weight is negative or the total deviates from one by more than `tol`.
    void validate(double tol = 1e-12) const;

   private:
    LatticeSpec spec_;
    std::map<BitConfig, double> weights_;
};

/// p'(step(rho)) = p(rho). Weights are moved, never mixed.
Ensemble ensemble_step(const Ensemble &e);

double expectation(const Ensemble &e, const std::function<double(const BitConfig &)> &obs);

}  // namespace fermicell
