#include "spectra/selection.hpp"

#include <stdexcept>

namespace spectra {

PolicyKind parse_policy(const std::string& name) {
    if (name == "reputation") return PolicyKind::reputation;
    if (name == "random") return PolicyKind::random;
    if (name == "best_csi") return PolicyKind::best_csi;
    throw std::invalid_argument("unknown policy '" + name +
                                "' (expected reputation|random|best_csi)");
}

std::string policy_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::reputation: return "reputation";
        case PolicyKind::random: return "random";
        case PolicyKind::best_csi: return "best_csi";
    }
    throw std::logic_error("unreachable policy kind");
}

namespace {
void require_candidates(const std::vector<int>& candidates) {
    if (candidates.empty()) {
        throw std::invalid_argument("selection: empty candidate set");
    }
}
}  // namespace

int select_reputation(const std::vector<int>& candidates,
                      const ReputationTable& table, Rng& rng) {
    require_candidates(candidates);
    double best = -1.0;
    std::vector<int> tied;
    for (int id : candidates) {
        const double r = table.get(id);
        if (r > best) {
            best = r;
            tied.clear();
            tied.push_back(id);
        } else if (r == best) {
            tied.push_back(id);
        }
    }
    if (tied.size() == 1) return tied.front();
    return tied[static_cast<std::size_t>(rng.uniform_below(tied.size()))];
}

int select_random(const std::vector<int>& candidates, Rng& rng) {
    require_candidates(candidates);
    return candidates[static_cast<std::size_t>(rng.uniform_below(candidates.size()))];
}

int select_best_csi(const std::vector<int>& candidates,
                    const std::vector<ChannelSet>& channels_by_id) {
    require_candidates(candidates);
    int best_id = candidates.front();
    double best_gain = channels_by_id.at(static_cast<std::size_t>(best_id)).g_ps;
    for (int id : candidates) {
        const double g = channels_by_id.at(static_cast<std::size_t>(id)).g_ps;
        if (g > best_gain || (g == best_gain && id < best_id)) {
            best_gain = g;
            best_id = id;
        }
    }
    return best_id;
}

}  // namespace spectra
