#include "spectra/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace spectra {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE) {
        throw ConfigError("config: key '" + key + "': '" + value + "' is not a number");
    }
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE) {
        throw ConfigError("config: key '" + key + "': '" + value + "' is not an integer");
    }
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE ||
        value.find('-') != std::string::npos) {
        throw ConfigError("config: key '" + key + "': '" + value +
                          "' is not an unsigned integer");
    }
    return v;
}

void require(bool ok, const std::string& key, const std::string& what) {
    if (!ok) throw ConfigError("config: key '" + key + "': " + what);
}

std::vector<double> parse_sweep(const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const double d = parse_double("sweep", item);
        require(d >= kMinDistanceM, "sweep",
                "distances must be >= " + std::to_string(kMinDistanceM));
        out.push_back(d);
    }
    require(!out.empty(), "sweep", "needs at least one distance");
    return out;
}

void apply(RunManifest& m, const std::string& key, const std::string& value) {
    ScenarioConfig& c = m.cfg;
    if (key == "scenario") {
        require(value == "scenario1" || value == "scenario2", key,
                "expected scenario1 or scenario2");
        m.scenario = value;
    } else if (key == "tool_version") {
        m.tool_version = value;
    } else if (key == "out_dir") {
        m.out_dir = value;
    } else if (key == "seed") {
        c.seed = parse_u64(key, value);
    } else if (key == "policy") {
        try {
            c.policy = parse_policy(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: key 'policy': ") + e.what());
        }
    } else if (key == "n_sus") {
        const long long v = parse_int(key, value);
        require(v >= 1, key, "must be >= 1");
        c.n_sus = static_cast<int>(v);
    } else if (key == "selfish_fraction") {
        const double v = parse_double(key, value);
        require(v >= 0.0 && v <= 1.0, key, "must lie in [0, 1]");
        c.selfish_fraction = v;
    } else if (key == "deviation_prob") {
        const double v = parse_double(key, value);
        require(v >= 0.0 && v <= 1.0, key, "must lie in [0, 1]");
        c.deviation_prob = v;
    } else if (key == "n_slots") {
        const long long v = parse_int(key, value);
        require(v >= 1, key, "must be >= 1");
        c.n_slots = static_cast<int>(v);
    } else if (key == "runs") {
        const long long v = parse_int(key, value);
        require(v >= 1, key, "must be >= 1");
        c.n_runs = static_cast<int>(v);
    } else if (key == "window") {
        const long long v = parse_int(key, value);
        require(v >= 1, key, "must be >= 1");
        c.window = static_cast<int>(v);
    } else if (key == "realizations") {
        const long long v = parse_int(key, value);
        require(v >= 1, key, "must be >= 1");
        c.realizations = static_cast<int>(v);
    } else if (key == "grid") {
        const long long v = parse_int(key, value);
        require(v >= 1 && v <= 2000, key, "must lie in [1, 2000]");
        c.leader_grid = static_cast<int>(v);
    } else if (key == "region_m") {
        const double v = parse_double(key, value);
        require(v / 4.0 >= kMinDistanceM, key, "deployment region too small");
        c.region_m = v;
    } else if (key == "sr_offset_m") {
        const double v = parse_double(key, value);
        require(v >= kMinDistanceM, key,
                "must be >= " + std::to_string(kMinDistanceM));
        c.sr_offset_m = v;
    } else if (key == "sweep") {
        c.sweep = parse_sweep(value);
    } else if (key == "pt_x") {
        c.pt.x = parse_double(key, value);
    } else if (key == "pt_y") {
        c.pt.y = parse_double(key, value);
    } else if (key == "pr_x") {
        c.pr.x = parse_double(key, value);
    } else if (key == "pr_y") {
        c.pr.y = parse_double(key, value);
    } else if (key == "ed_x") {
        c.ed.x = parse_double(key, value);
    } else if (key == "ed_y") {
        c.ed.y = parse_double(key, value);
    } else if (key == "st_x") {
        c.st.x = parse_double(key, value);
    } else if (key == "st_y") {
        c.st.y = parse_double(key, value);
    } else if (key == "sr_x") {
        c.sr.x = parse_double(key, value);
    } else if (key == "sr_y") {
        c.sr.y = parse_double(key, value);
    } else if (key == "p_p") {
        const double v = parse_double(key, value);
        require(v > 0.0, key, "must be > 0");
        c.game.p_p = v;
    } else if (key == "sigma2") {
        const double v = parse_double(key, value);
        require(v > 0.0, key, "must be > 0");
        c.game.sigma2 = v;
    } else if (key == "rho") {
        const double v = parse_double(key, value);
        require(v > 0.0, key, "must be > 0");
        c.game.rho = v;
    } else if (key == "eta1") {
        const double v = parse_double(key, value);
        require(v >= 0.0, key, "must be >= 0");
        c.game.eta1 = v;
    } else if (key == "eta2") {
        const double v = parse_double(key, value);
        require(v >= 0.0, key, "must be >= 0");
        c.game.eta2 = v;
    } else if (key == "eta3") {
        const double v = parse_double(key, value);
        require(v > 0.0, key, "must be > 0");
        c.game.eta3 = v;
    } else if (key == "t_slot") {
        const double v = parse_double(key, value);
        require(v > 0.0, key, "must be > 0");
        c.game.t_slot = v;
    } else if (key == "p_max") {
        const double v = parse_double(key, value);
        require(v > 0.0, key, "must be > 0");
        c.su.p_max = v;
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

}  // namespace

RunManifest parse_manifest(const std::string& path,
                           const std::vector<KeyValue>& overrides) {
    RunManifest manifest;
    std::vector<KeyValue> pairs;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError("config: cannot read '" + path + "'");
        std::string line;
        int line_no = 0;
        std::map<std::string, int> seen;
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("config: " + path + ":" + std::to_string(line_no) +
                                  ": expected 'key = value'");
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) {
                throw ConfigError("config: " + path + ":" + std::to_string(line_no) +
                                  ": empty key");
            }
            if (seen.count(key)) {
                throw ConfigError("config: " + path + ": duplicate key '" + key +
                                  "' (lines " + std::to_string(seen[key]) + " and " +
                                  std::to_string(line_no) + ")");
            }
            seen[key] = line_no;
            pairs.emplace_back(key, value);
        }
    }
    for (const auto& kv : overrides) pairs.push_back(kv);
    for (const auto& [key, value] : pairs) apply(manifest, key, value);
    if (manifest.cfg.window > manifest.cfg.n_slots) {
        throw ConfigError("config: key 'window': must not exceed n_slots");
    }
    return manifest;
}

ScenarioConfig parse_config(const std::string& path,
                            const std::vector<KeyValue>& overrides) {
    return parse_manifest(path, overrides).cfg;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_manifest(const RunManifest& manifest, const std::string& path) {
    const ScenarioConfig& c = manifest.cfg;
    std::ostringstream out;
    out << "# run manifest (machine-written; edit at your own risk)\n";
    if (!manifest.scenario.empty()) out << "scenario = " << manifest.scenario << "\n";
    out << "tool_version = " << manifest.tool_version << "\n";
    if (!manifest.out_dir.empty()) out << "out_dir = " << manifest.out_dir << "\n";
    out << "seed = " << c.seed << "\n";
    out << "policy = " << policy_name(c.policy) << "\n";
    out << "n_sus = " << c.n_sus << "\n";
    out << "selfish_fraction = " << fmt17(c.selfish_fraction) << "\n";
    out << "deviation_prob = " << fmt17(c.deviation_prob) << "\n";
    out << "n_slots = " << c.n_slots << "\n";
    out << "runs = " << c.n_runs << "\n";
    out << "window = " << c.window << "\n";
    out << "realizations = " << c.realizations << "\n";
    out << "grid = " << c.leader_grid << "\n";
    out << "region_m = " << fmt17(c.region_m) << "\n";
    out << "sr_offset_m = " << fmt17(c.sr_offset_m) << "\n";
    out << "pt_x = " << fmt17(c.pt.x) << "\n";
    out << "pt_y = " << fmt17(c.pt.y) << "\n";
    out << "pr_x = " << fmt17(c.pr.x) << "\n";
    out << "pr_y = " << fmt17(c.pr.y) << "\n";
    out << "ed_x = " << fmt17(c.ed.x) << "\n";
    out << "ed_y = " << fmt17(c.ed.y) << "\n";
    out << "st_x = " << fmt17(c.st.x) << "\n";
    out << "st_y = " << fmt17(c.st.y) << "\n";
    out << "sr_x = " << fmt17(c.sr.x) << "\n";
    out << "sr_y = " << fmt17(c.sr.y) << "\n";
    out << "sweep = ";
    for (std::size_t i = 0; i < c.sweep.size(); ++i) {
        if (i) out << ",";
        out << fmt17(c.sweep[i]);
    }
    out << "\n";
    out << "p_p = " << fmt17(c.game.p_p) << "\n";
    out << "sigma2 = " << fmt17(c.game.sigma2) << "\n";
    out << "rho = " << fmt17(c.game.rho) << "\n";
    out << "eta1 = " << fmt17(c.game.eta1) << "\n";
    out << "eta2 = " << fmt17(c.game.eta2) << "\n";
    out << "eta3 = " << fmt17(c.game.eta3) << "\n";
    out << "t_slot = " << fmt17(c.game.t_slot) << "\n";
    out << "p_max = " << fmt17(c.su.p_max) << "\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("manifest: cannot write '" + path + "'");
    file << out.str();
    file.flush();
    if (!file) throw std::runtime_error("manifest: write to '" + path + "' failed");
}

}  // namespace spectra
