#include "spectra/reputation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spectra {

double init_reputation() { return kReputationFloor; }

double epsilon(const PowerAllocation& pw, const ChannelSet& ch) {
    const double service = pw.p_j * ch.g_se + pw.p_c * ch.g_sp;
    const double self = pw.p_s * ch.g_ss;
    if (self == 0.0) {
        return service > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
    }
    return service / self;
}

double first_hand_update(double r_prev, const PowerAllocation& pw,
                         const ChannelSet& ch, double eta3) {
    if (!(r_prev >= kReputationFloor && r_prev <= 1.0)) {
        throw std::invalid_argument("first_hand_update: r_prev outside [floor, 1]");
    }
    const double eps = epsilon(pw, ch);
    if (eps == 0.0) return kReputationFloor;
    const double r = r_prev + eta3 * std::log(eps);  // +-inf eps handled by clamp
    return std::clamp(r, kReputationFloor, 1.0);
}

double second_hand(const std::vector<double>& neighbor_reps) {
    if (neighbor_reps.empty()) return init_reputation();
    const double sum = std::accumulate(neighbor_reps.begin(), neighbor_reps.end(), 0.0);
    return sum / static_cast<double>(neighbor_reps.size());
}

void ReputationTable::add(int id) {
    entries_.emplace(id, init_reputation());
}

void ReputationTable::set(int id, double r) {
    if (!(r >= kReputationFloor && r <= 1.0)) {
        throw std::invalid_argument("reputation " + std::to_string(r) +
                                    " outside [" + std::to_string(kReputationFloor) + ", 1]");
    }
    entries_[id] = r;
}

double ReputationTable::get(int id) const {
    const auto it = entries_.find(id);
    if (it == entries_.end()) {
        throw std::invalid_argument("reputation table: unknown SU id " + std::to_string(id));
    }
    return it->second;
}

bool ReputationTable::contains(int id) const { return entries_.count(id) != 0; }

}  // namespace spectra
