#include "fermicell/automaton.h"

#include <cmath>
#include <stdexcept>

#include "fermicell/kernels.h"

namespace fermicell {

BitConfig free_step(const BitConfig &config) {
    BitConfig out = config;
    swar::transport_words(out.mutable_words(), out.sites());
    return out;
}

BitConfig inverse_free_step(const BitConfig &config) {
    BitConfig out = config;
    swar::inverse_transport_words(out.mutable_words(), out.sites());
    return out;
}

BitConfig interaction_step(const BitConfig &config) {
    BitConfig out = config;
    swar::interaction_words(out.mutable_words());
    return out;
}

BitConfig automaton_step(const BitConfig &config) { return interaction_step(free_step(config)); }

BitConfig inverse_step(const BitConfig &config) { return inverse_free_step(interaction_step(config)); }

std::string scatter_kind_name(ScatterKind kind) {
    return kind == ScatterKind::Swap9and6 ? "scatter_9_6" : "scatter_5_10";
}

Trajectory trajectory(const BitConfig &start, int n_steps) {
    if (n_steps < 0) {
        throw std::invalid_argument("trajectory: n_steps must be non-negative");
    }
    Trajectory out;
    out.configs.reserve(static_cast<std::size_t>(n_steps) + 1);
    out.configs.push_back(start);
    for (int t = 1; t <= n_steps; ++t) {
        BitConfig moved = free_step(out.configs.back());
        BitConfig next = interaction_step(moved);
        for (int x = 0; x < moved.sites(); ++x) {
            Nibble before = local_nibble(moved, x);
            Nibble after = local_nibble(next, x);
            if (before != after) {
                auto kind = (before.value == 9 || before.value == 6) ? ScatterKind::Swap9and6 : ScatterKind::Swap5and10;
                out.events.push_back(TrajectoryEvent{t, x, kind, before, after});
            }
        }
        out.configs.push_back(next);
    }
    return out;
}

Ensemble::Ensemble(LatticeSpec spec) : spec_(spec) {}

Ensemble::Ensemble(LatticeSpec spec, std::map<BitConfig, double> weights) : spec_(spec), weights_(std::move(weights)) {
    for (auto it = weights_.begin(); it != weights_.end();) {
        if (it->first.sites() != spec_.sites()) {
            throw std::invalid_argument("ensemble entry has the wrong number of sites");
        }
        it = it->second == 0.0 ? weights_.erase(it) : std::next(it);
    }
}

Ensemble Ensemble::point_mass(const BitConfig &config, const LatticeSpec &spec) {
    return Ensemble(spec, {{config, 1.0}});
}

Ensemble Ensemble::uniform(const LatticeSpec &spec) {
    const auto n = spec.num_configs();
    std::map<BitConfig, double> w;
    const double p = 1.0 / static_cast<double>(n);
    for (std::uint64_t tau = 0; tau < n; ++tau) {
        w.emplace_hint(w.end(), BitConfig::from_index(tau, spec), p);
    }
    return Ensemble(spec, std::move(w));
}

double Ensemble::probability(const BitConfig &config) const {
    auto it = weights_.find(config);
    return it == weights_.end() ? 0.0 : it->second;
}

double Ensemble::total() const {
    double s = 0;
    for (const auto &[c, p] : weights_) {
        s += p;
    }
    return s;
}

void Ensemble::validate(double tol) const {
    for (const auto &[c, p] : weights_) {
        if (!(p >= 0)) {
            throw std::invalid_argument("ensemble weight must be non-negative");
        }
    }
    if (std::abs(total() - 1.0) > tol) {
        throw std::invalid_argument("ensemble weights must sum to one");
    }
}

Ensemble ensemble_step(const Ensemble &e) {
    std::map<BitConfig, double> next;
    const auto &spec = e.spec();
    if (spec.indexable()) {
        std::vector<std::uint64_t> keys;
        std::vector<double> probs;
        keys.reserve(e.support_size());
        for (const auto &[c, p] : e.weights()) {
            keys.push_back(c.index());
            probs.push_back(p);
        }
        std::vector<std::uint64_t> moved(keys.size());
        step_batch(keys, moved, spec.sites());
        for (std::size_t i = 0; i < keys.size(); ++i) {
            next.emplace(BitConfig::from_index(moved[i], spec), probs[i]);
        }
    } else {
        for (const auto &[c, p] : e.weights()) {
            next.emplace(automaton_step(c), p);
        }
    }
    return Ensemble(spec, std::move(next));
}

double expectation(const Ensemble &e, const std::function<double(const BitConfig &)> &obs) {
    double s = 0;
    for (const auto &[c, p] : e.weights()) {
        s += p * obs(c);
    }
    return s;
}

}  // namespace fermicell
