#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectra/chart.hpp"
#include "spectra/config.hpp"
#include "spectra/csv.hpp"
#include "spectra/sim.hpp"
#include "selftest.hpp"

namespace fs = std::filesystem;
using namespace spectra;

namespace {

// Common run options shared by the scenario subcommands.
struct RunOptions {
    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> sets;
    // dedicated flags, kept as strings so "unset" is distinguishable
    std::string seed, policy, slots, runs;

    std::vector<KeyValue> overrides() const {
        std::vector<KeyValue> kv;
        if (!seed.empty()) kv.emplace_back("seed", seed);
        if (!policy.empty()) kv.emplace_back("policy", policy);
        if (!slots.empty()) kv.emplace_back("n_slots", slots);
        if (!runs.empty()) kv.emplace_back("runs", runs);
        for (const auto& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("--set expects key=value, got '" + s + "'");
            }
            kv.emplace_back(s.substr(0, eq), s.substr(eq + 1));
        }
        return kv;
    }
};

void add_run_options(CLI::App* cmd, RunOptions& opt) {
    cmd->add_option("--config", opt.config_path, "configuration file (key = value lines)");
    cmd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--seed", opt.seed, "master seed (u64)");
    cmd->add_option("--policy", opt.policy, "reputation|random|best_csi");
    cmd->add_option("--slots", opt.slots, "slots per run");
    cmd->add_option("--runs", opt.runs, "independent runs");
    cmd->add_option("--set", opt.sets, "override any config key (key=value, repeatable)");
}

void execute_scenario(RunManifest manifest, const std::string& out_dir) {
    fs::create_directories(out_dir);
    manifest.out_dir = out_dir;
    if (manifest.scenario == "scenario1") {
        const ResultTable t = run_scenario1(manifest.cfg.sweep, manifest.cfg);
        emit_csv(t, out_dir + "/scenario1.csv");
        emit_chart(t, ChartKind::rate_vs_distance, out_dir + "/rate_vs_distance.svg");
        emit_chart(t, ChartKind::jamming_vs_distance,
                   out_dir + "/jamming_vs_distance.svg");
        emit_chart(t, ChartKind::alphabeta_vs_distance,
                   out_dir + "/alphabeta_vs_distance.svg");
        write_manifest(manifest, out_dir + "/manifest.txt");
        std::printf("scenario1: %zu sweep points x %d realizations -> %s\n",
                    manifest.cfg.sweep.size(), manifest.cfg.realizations,
                    out_dir.c_str());
    } else if (manifest.scenario == "scenario2") {
        const ResultTable t = run_scenario2(manifest.cfg);
        emit_csv(t, out_dir + "/scenario2.csv");
        emit_chart(t, ChartKind::unreliable_vs_time, out_dir + "/unreliable_vs_time.svg");
        write_manifest(manifest, out_dir + "/manifest.txt");
        std::printf("scenario2: %d runs x %d slots, 3 policies -> %s\n",
                    manifest.cfg.n_runs, manifest.cfg.n_slots, out_dir.c_str());
    } else {
        throw ConfigError("config: key 'scenario': missing or empty");
    }
}

ChannelSet parse_channel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("channel file: cannot read '" + path + "'");
    ChannelSet ch;
    bool has_ps = false, has_sp = false, has_ss = false, has_se = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        double v = 0.0;
        try {
            v = std::stod(value);
        } catch (...) {
            throw ConfigError("channel file: key '" + key + "': bad number '" + value + "'");
        }
        if (v < 0.0) throw ConfigError("channel file: key '" + key + "': gains are >= 0");
        if (key == "g_ps") ch.g_ps = v, has_ps = true;
        else if (key == "g_sp") ch.g_sp = v, has_sp = true;
        else if (key == "g_ss") ch.g_ss = v, has_ss = true;
        else if (key == "g_se") ch.g_se = v, has_se = true;
        else throw ConfigError("channel file: unknown key '" + key + "'");
    }
    if (!(has_ps && has_sp && has_ss && has_se)) {
        throw ConfigError("channel file: needs g_ps, g_sp, g_ss, g_se");
    }
    return ch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra-lease: spectrum-leasing Stackelberg game simulator"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    RunOptions s1_opt, s2_opt, solve_opt;
    std::string manifest_path, rerun_out, channel_path;

    CLI::App* s1 = app.add_subcommand("scenario1",
                                      "eavesdropper-distance sweep (single SU)");
    add_run_options(s1, s1_opt);
    CLI::App* s2 = app.add_subcommand("scenario2",
                                      "selection-policy comparison (multi SU)");
    add_run_options(s2, s2_opt);

    CLI::App* rerun = app.add_subcommand("rerun", "reproduce a run from its manifest");
    rerun->add_option("--manifest", manifest_path, "manifest file")->required();
    rerun->add_option("--out", rerun_out, "output directory (default: manifest out_dir)");

    CLI::App* solve = app.add_subcommand("solve",
                                         "one-shot Stackelberg solve for a channel file");
    solve->add_option("--channel", channel_path, "file with g_ps/g_sp/g_ss/g_se")
        ->required();
    add_run_options(solve, solve_opt);

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (s1->parsed()) {
            RunManifest m = parse_manifest(s1_opt.config_path, s1_opt.overrides());
            if (!m.scenario.empty() && m.scenario != "scenario1") {
                throw ConfigError("config: key 'scenario': file says '" + m.scenario +
                                  "' but subcommand is scenario1");
            }
            m.scenario = "scenario1";
            execute_scenario(std::move(m), s1_opt.out_dir);
        } else if (s2->parsed()) {
            RunManifest m = parse_manifest(s2_opt.config_path, s2_opt.overrides());
            if (!m.scenario.empty() && m.scenario != "scenario2") {
                throw ConfigError("config: key 'scenario': file says '" + m.scenario +
                                  "' but subcommand is scenario2");
            }
            m.scenario = "scenario2";
            execute_scenario(std::move(m), s2_opt.out_dir);
        } else if (rerun->parsed()) {
            RunManifest m = parse_manifest(manifest_path, {});
            const std::string out_dir = rerun_out.empty() ? m.out_dir : rerun_out;
            if (out_dir.empty()) {
                throw ConfigError("rerun: manifest has no out_dir; pass --out");
            }
            execute_scenario(std::move(m), out_dir);
        } else if (solve->parsed()) {
            const RunManifest m = parse_manifest(solve_opt.config_path, solve_opt.overrides());
            const ChannelSet ch = parse_channel_file(channel_path);
            const StackelbergSolution sol =
                stackelberg_solve(m.cfg.su, ch, m.cfg.game, m.cfg.leader_grid);
            std::printf("leased = %s\n", sol.leased ? "true" : "false");
            std::printf("alpha_star = %s\n", format_sig9(sol.alpha_star).c_str());
            std::printf("beta_star = %s\n", format_sig9(sol.beta_star).c_str());
            std::printf("p_s_star = %s\n", format_sig9(sol.powers.p_s).c_str());
            std::printf("p_c_star = %s\n", format_sig9(sol.powers.p_c).c_str());
            std::printf("p_j_star = %s\n", format_sig9(sol.powers.p_j).c_str());
            std::printf("secrecy_rate = %s\n", format_sig9(sol.secrecy_rate).c_str());
            std::printf("su_utility = %s\n", format_sig9(sol.su_utility).c_str());
        } else if (selftest->parsed()) {
            if (run_selftest() != 0) return 3;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
