#include "fermicell/config.h"

#include <set>

namespace fermicell {

namespace {

constexpr const char *kModeNames[] = {"trajectory", "ensemble", "wavefunction", "verify", "spectrum", "trotter"};

void reject_unknown(const json &j, const std::set<std::string> &allowed, const std::string &where) {
    if (!j.is_object()) {
        throw ConfigError(where + " must be an object");
    }
    for (const auto &[k, v] : j.items()) {
        if (!allowed.count(k)) {
            throw ConfigError("unknown key in " + where + ": " + k);
        }
    }
}

template <typename T>
T get_as(const json &j, const std::string &key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError("bad value for \"" + key + "\": " + e.what());
    }
}

}  // namespace

std::string mode_name(Mode m) { return kModeNames[static_cast<int>(m)]; }

Mode parse_mode(const std::string &name) {
    for (int i = 0; i < 6; ++i) {
        if (name == kModeNames[i]) {
            return static_cast<Mode>(i);
        }
    }
    throw ConfigError("unknown mode: " + name);
}

json tolerances_to_json(const Tolerances &t) {
    return json{{"probability", t.probability},       {"round_trip", t.round_trip},
                {"schrodinger", t.schrodinger},       {"operator_match", t.operator_match},
                {"anticommutator", t.anticommutator}, {"phase", t.phase},
                {"normalization", t.normalization}};
}

RunConfig parse_run_config(const json &j) {
    reject_unknown(j,
                   {"schema", "mode", "lattice", "steps", "seed", "initial", "input", "ensemble", "random_support",
                    "output", "max_dim", "tolerances", "trotter", "suites"},
                   "config");
    RunConfig c;
    if (!j.contains("schema")) {
        throw ConfigError("config needs \"schema\"");
    }
    c.schema = get_as<int>(j, "schema");
    if (c.schema != kConfigSchemaVersion) {
        throw ConfigError("unsupported schema version " + std::to_string(c.schema));
    }
    if (j.contains("mode")) {
        c.mode = parse_mode(get_as<std::string>(j, "mode"));
    }
    if (j.contains("lattice")) {
        const json &l = j.at("lattice");
        reject_unknown(l, {"M_x", "epsilon"}, "lattice");
        if (l.contains("M_x")) {
            c.sites = get_as<int>(l, "M_x");
        }
        if (l.contains("epsilon")) {
            c.epsilon = get_as<double>(l, "epsilon");
        }
    }
    if (c.sites < 1 || c.sites > kMaxSites) {
        throw ConfigError("M_x must lie in [1, 64]");
    }
    if (!(c.epsilon > 0)) {
        throw ConfigError("epsilon must be positive");
    }
    if (j.contains("steps")) {
        c.steps = get_as<int>(j, "steps");
        if (c.steps < 0) {
            throw ConfigError("steps must be non-negative");
        }
    }
    if (j.contains("seed")) {
        c.seed = get_as<std::uint64_t>(j, "seed");
    }
    if (j.contains("initial")) {
        c.initial = config_from_json(j.at("initial"));
        if (c.initial->sites() != c.sites) {
            throw ConfigError("initial configuration does not match lattice M_x");
        }
    }
    if (j.contains("input")) {
        c.input = get_as<std::string>(j, "input");
    }
    if (j.contains("ensemble")) {
        c.ensemble = ensemble_from_json(j.at("ensemble"));
        if (c.ensemble->spec().sites() != c.sites) {
            throw ConfigError("ensemble does not match lattice M_x");
        }
    }
    if (j.contains("random_support")) {
        c.random_support = get_as<std::size_t>(j, "random_support");
    }
    if (j.contains("output")) {
        const json &o = j.at("output");
        reject_unknown(o, {"dir", "prefix"}, "output");
        if (o.contains("dir")) {
            c.output_dir = get_as<std::string>(o, "dir");
        }
        if (o.contains("prefix")) {
            c.prefix = get_as<std::string>(o, "prefix");
        }
    }
    if (j.contains("max_dim")) {
        c.max_dim = get_as<std::uint64_t>(j, "max_dim");
    }
    if (j.contains("tolerances")) {
        const json &t = j.at("tolerances");
        reject_unknown(t,
                       {"probability", "round_trip", "schrodinger", "operator_match", "anticommutator", "phase",
                        "normalization"},
                       "tolerances");
        auto set = [&](const char *k, double &field) {
            if (t.contains(k)) {
                field = get_as<double>(t, k);
            }
        };
        set("probability", c.tolerances.probability);
        set("round_trip", c.tolerances.round_trip);
        set("schrodinger", c.tolerances.schrodinger);
        set("operator_match", c.tolerances.operator_match);
        set("anticommutator", c.tolerances.anticommutator);
        set("phase", c.tolerances.phase);
        set("normalization", c.tolerances.normalization);
    }
    if (j.contains("trotter")) {
        const json &t = j.at("trotter");
        reject_unknown(t, {"widths", "M_x"}, "trotter");
        if (t.contains("widths")) {
            c.trotter_widths = get_as<std::vector<double>>(t, "widths");
        }
        if (t.contains("M_x")) {
            c.trotter_sites = get_as<int>(t, "M_x");
        }
    }
    if (j.contains("suites")) {
        c.suites = get_as<std::vector<std::string>>(j, "suites");
    }
    return c;
}

RunConfig load_run_config(const std::string &path) {
    const std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(path + ": " + e.what());
    }
    return parse_run_config(j);
}

json run_config_to_json(const RunConfig &c) {
    json j{{"schema", c.schema},
           {"mode", mode_name(c.mode)},
           {"lattice", {{"M_x", c.sites}, {"epsilon", c.epsilon}}},
           {"steps", c.steps},
           {"seed", c.seed},
           {"random_support", c.random_support},
           {"output", {{"dir", c.output_dir}, {"prefix", c.prefix}}},
           {"max_dim", c.max_dim},
           {"tolerances", tolerances_to_json(c.tolerances)},
           {"trotter", {{"widths", c.trotter_widths}, {"M_x", c.trotter_sites}}},
           {"suites", c.suites}};
    if (c.initial) {
        j["initial"] = config_to_json(*c.initial);
    }
    if (c.input) {
        j["input"] = *c.input;
    }
    if (c.ensemble) {
        j["ensemble"] = ensemble_to_json(*c.ensemble);
    }
    return j;
}

}  // namespace fermicell
