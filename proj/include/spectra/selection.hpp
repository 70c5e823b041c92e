#pragma once

#include <string>
#include <vector>

#include "spectra/reputation.hpp"

namespace spectra {

enum class PolicyKind { reputation, random, best_csi };

// Parse/format for CLI and CSV ("reputation", "random", "best_csi").
PolicyKind parse_policy(const std::string& name);
std::string policy_name(PolicyKind kind);

// All selectors operate on a non-empty candidate id list (callers filter
// out secrecy-infeasible SUs first) and throw std::invalid_argument on an
// empty one.

// Highest reputation; exact ties are broken uniformly at random so a cold
// start (everyone at the floor) carries no id bias.
int select_reputation(const std::vector<int>& candidates,
                      const ReputationTable& table, Rng& rng);

// Uniform draw.
int select_random(const std::vector<int>& candidates, Rng& rng);

// Largest PT->ST power gain (the proximity-driven link); ties go to the
// lowest id. channels_by_id[id] must be the candidate's ChannelSet.
int select_best_csi(const std::vector<int>& candidates,
                    const std::vector<ChannelSet>& channels_by_id);

}  // namespace spectra
