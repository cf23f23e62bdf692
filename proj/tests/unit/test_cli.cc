#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

fs::path scratch(const std::string &name) {
    const fs::path p = fs::temp_directory_path() / ("fermicell_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run(const std::string &args) {
    const std::string cmd = std::string(FERMICELL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_config(const fs::path &dir, const json &cfg, const std::string &extra = "") {
    const fs::path path = dir / "config.json";
    std::ofstream(path) << cfg.dump(2);
    return run("--config " + path.string() + " --out " + dir.string() + " " + extra);
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, Version) { EXPECT_EQ(run("--version"), 0); }

TEST(Cli, BadArgumentsAndConfig) {
    const fs::path d = scratch("bad");
    EXPECT_EQ(run("--no-such-flag"), 2);
    EXPECT_EQ(run("--config " + (d / "missing.json").string()), 2);
    EXPECT_EQ(run_config(d, {{"schema", 1}, {"lattice", {{"M_x", 1}}}, {"unknown", true}}), 2);
    EXPECT_EQ(run_config(d, {{"schema", 9}}), 2);
    EXPECT_EQ(run("--mode teleport"), 2);
}

TEST(Cli, TrajectoryOutputsAreDeterministic) {
    const fs::path d = scratch("traj");
    const json cfg = {{"schema", 1},
                      {"mode", "trajectory"},
                      {"lattice", {{"M_x", 3}}},
                      {"steps", 6},
                      {"initial", {{"M_x", 3}, {"bits", "100000000010"}}},
                      {"output", {{"prefix", "t"}}}};
    ASSERT_EQ(run_config(d, cfg), 0);
    const std::string events = slurp(d / "t_events.jsonl");
    const std::string svg = slurp(d / "t_trajectory.svg");
    EXPECT_NE(events.find("scatter_5_10"), std::string::npos);
    EXPECT_NE(svg.find("<rect class=\"scatter\""), std::string::npos);
    ASSERT_EQ(run_config(d, cfg), 0);
    EXPECT_EQ(slurp(d / "t_events.jsonl"), events);
    EXPECT_EQ(slurp(d / "t_trajectory.svg"), svg);
    EXPECT_TRUE(fs::exists(d / "t_configs.jsonl"));
}

TEST(Cli, EnsembleSeeded) {
    const fs::path d = scratch("ens");
    const json cfg = {{"schema", 1}, {"mode", "ensemble"}, {"lattice", {{"M_x", 2}}}, {"steps", 3}};
    ASSERT_EQ(run_config(d, cfg, "--seed 11"), 0);
    const std::string first = slurp(d / "run_ensemble.csv");
    ASSERT_EQ(run_config(d, cfg, "--seed 11"), 0);
    EXPECT_EQ(slurp(d / "run_ensemble.csv"), first);
    ASSERT_EQ(run_config(d, cfg, "--seed 12"), 0);
    EXPECT_NE(slurp(d / "run_ensemble.csv"), first);
}

TEST(Cli, WavefunctionBudget) {
    const fs::path d = scratch("budget");
    EXPECT_EQ(run_config(d, {{"schema", 1}, {"mode", "wavefunction"}, {"lattice", {{"M_x", 2}}}}), 0);
    EXPECT_EQ(run_config(d, {{"schema", 1}, {"mode", "wavefunction"}, {"lattice", {{"M_x", 5}}}, {"max_dim", 16}}), 3);
}

TEST(Cli, SpectrumHasOnePhasePerMomentum) {
    const fs::path d = scratch("spec");
    ASSERT_EQ(run_config(d, {{"schema", 1}, {"mode", "spectrum"}, {"lattice", {{"M_x", 4}}}}), 0);
    std::istringstream csv(slurp(d / "run_spectrum.csv"));
    std::string line;
    std::getline(csv, line);
    std::map<std::string, int> per_species;
    while (std::getline(csv, line)) {
        ++per_species[line.substr(0, line.find(','))];
    }
    ASSERT_EQ(per_species.size(), 4u);
    for (const auto &[s, n] : per_species) {
        EXPECT_EQ(n, 4) << s;
    }
    EXPECT_TRUE(fs::exists(d / "run_commutator.csv"));
}

TEST(Cli, VerifySelectedSuitesPass) {
    const fs::path d = scratch("verify_ok");
    const json cfg = {{"schema", 1},
                      {"mode", "verify"},
                      {"lattice", {{"M_x", 1}}},
                      {"suites", {"lattice.index_roundtrip", "automaton.bijection", "grassmann.chain_rule"}}};
    EXPECT_EQ(run_config(d, cfg), 0);
    const json manifest = json::parse(slurp(d / "run_manifest.json"));
    EXPECT_FALSE(manifest.empty());
    EXPECT_TRUE(fs::exists(d / "run_verify.json"));
}

TEST(Cli, VerifyReportsFailure) {
    const fs::path d = scratch("verify_fail");
    const json cfg = {{"schema", 1}, {"mode", "verify"}, {"lattice", {{"M_x", 1}}}, {"suites", {"fock.s_int"}}};
    EXPECT_EQ(run_config(d, cfg), 1);
}

TEST(Cli, VerifyAllSuitesTwoSites) {
    const fs::path d = scratch("verify_all");
    EXPECT_EQ(run_config(d, {{"schema", 1}, {"mode", "verify"}, {"lattice", {{"M_x", 2}}}}), 0);
}

TEST(Cli, TrotterScan) {
    const fs::path d = scratch("trotter");
    const json cfg = {{"schema", 1}, {"mode", "trotter"}, {"steps", 4}, {"trotter", {{"widths", {2, 4}}, {"M_x", 8}}}};
    EXPECT_EQ(run_config(d, cfg), 0);
    EXPECT_TRUE(fs::exists(d / "run_trotter.csv"));
}
