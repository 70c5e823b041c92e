#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spectra/sim.hpp"

namespace spectra {

inline constexpr const char* kToolVersion = "0.1.0";

// Bad key, bad value, unreadable file. Maps to CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using KeyValue = std::pair<std::string, std::string>;

// A fully resolved run: scenario binding plus materialized configuration.
// Serialized next to the results; feeding it back through `rerun`
// reproduces the output bytes.
struct RunManifest {
    std::string scenario;  // "scenario1" | "scenario2" (may be empty pre-binding)
    ScenarioConfig cfg;
    std::string tool_version = kToolVersion;
    std::string out_dir;
};

// Flat `key = value` text, one pair per line, '#' comments. An empty path
// yields the built-in defaults. Overrides (from CLI flags) win over file
// values. Unknown keys, malformed or out-of-range values raise ConfigError
// naming the key.
RunManifest parse_manifest(const std::string& path,
                           const std::vector<KeyValue>& overrides);

// Same, returning only the scenario configuration.
ScenarioConfig parse_config(const std::string& path,
                            const std::vector<KeyValue>& overrides);

// Writes the manifest with round-trip precision (17 significant digits).
void write_manifest(const RunManifest& manifest, const std::string& path);

}  // namespace spectra
