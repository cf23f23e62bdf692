#include "fermicell/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fermicell {

json config_to_json(const BitConfig &config) {
    return json{{"M_x", config.sites()}, {"bits", config.to_bit_string()}};
}

BitConfig config_from_json(const json &j) {
    if (!j.is_object() || !j.contains("M_x") || !j.contains("bits")) {
        throw ConfigError("configuration literal needs \"M_x\" and \"bits\"");
    }
    for (const auto &[k, v] : j.items()) {
        if (k != "M_x" && k != "bits") {
            throw ConfigError("unknown key in configuration literal: " + k);
        }
    }
    const int sites = j.at("M_x").get<int>();
    const auto bits = j.at("bits").get<std::string>();
    if (static_cast<int>(bits.size()) != kSpeciesCount * sites) {
        throw ConfigError("bit string length must be 4*M_x");
    }
    try {
        return BitConfig::from_bit_string(bits);
    } catch (const std::exception &e) {
        throw ConfigError(e.what());
    }
}

json ensemble_to_json(const Ensemble &e) {
    json entries = json::array();
    for (const auto &[c, p] : e.weights()) {
        entries.push_back({{"bits", c.to_bit_string()}, {"p", p}});
    }
    return json{{"M_x", e.spec().sites()}, {"entries", entries}};
}

Ensemble ensemble_from_json(const json &j) {
    if (!j.is_object() || !j.contains("M_x") || !j.contains("entries")) {
        throw ConfigError("ensemble needs \"M_x\" and \"entries\"");
    }
    const LatticeSpec spec(j.at("M_x").get<int>());
    std::map<BitConfig, double> w;
    for (const auto &entry : j.at("entries")) {
        BitConfig c = config_from_json({{"M_x", spec.sites()}, {"bits", entry.at("bits")}});
        if (!w.emplace(c, entry.at("p").get<double>()).second) {
            throw ConfigError("duplicate configuration in ensemble");
        }
    }
    Ensemble e(spec, std::move(w));
    try {
        e.validate();
    } catch (const std::invalid_argument &err) {
        throw ConfigError(err.what());
    }
    return e;
}

std::string events_to_jsonl(const std::vector<TrajectoryEvent> &events) {
    std::string out;
    for (const auto &ev : events) {
        out += json{{"t", ev.t}, {"x", ev.x}, {"kind", scatter_kind_name(ev.kind)}}.dump();
        out += '\n';
    }
    return out;
}

json wavefunction_to_json(const WaveFunction &q) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < q.q.size(); ++i) {
        arr.push_back(q.q(i));
    }
    return arr;
}

std::string spectrum_csv(const LatticeSpec &spec) {
    std::ostringstream out;
    out.precision(17);
    out << "species,k,phase\n";
    for (int g = 0; g < kSpeciesCount; ++g) {
        const Species s = Species::from_index(g);
        for (int k = 0; k < spec.sites(); ++k) {
            out << s.name() << ',' << k << ',' << free_phase(spec, s, k) + 0.0 << '\n';
        }
    }
    return out.str();
}

std::string commutator_csv(const LatticeSpec &spec, std::uint64_t max_dim) {
    std::ostringstream out;
    out << "sector,residual\n";
    out << "total," << translation_commutator(spec, max_dim) << '\n';
    const int modes = 2 * spec.sites();
    for (int nr = 0; nr <= modes; ++nr) {
        for (int nl = 0; nl <= modes; ++nl) {
            const Basis basis = Basis::sector(spec, ChargeSector{nr, nl, std::nullopt});
            int residual = 0;
            for (const auto &c : basis.states()) {
                if (automaton_step(translate(c, 1)) != translate(automaton_step(c), 1)) {
                    residual = 1;
                    break;
                }
            }
            out << "N_R=" << nr << " N_L=" << nl << ',' << residual << '\n';
        }
    }
    return out.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << contents;
}

}  // namespace fermicell
