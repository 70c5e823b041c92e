#pragma once

#include <map>
#include <vector>

#include "spectra/game.hpp"

namespace spectra {

// Lower bound of the reputation range. Newcomers start here; a full
// defection (eps = 0) lands here in a single update.
inline constexpr double kReputationFloor = 0.01;

double init_reputation();

// CSI-weighted service-to-self power ratio driving the reputation step:
//   eps = (P_J g_se + P_C g_sp) / (P_S g_ss)
// A zero denominator with positive numerator yields +infinity; 0/0 is
// neutral (1): no transmission either way is no evidence either way.
double epsilon(const PowerAllocation& pw, const ChannelSet& ch);

// r_new = clamp(r_prev + eta3 ln(eps), floor, 1). The upper clamp is the
// min(.., 1) of the update rule; the floor keeps ln-driven crashes finite.
double first_hand_update(double r_prev, const PowerAllocation& pw,
                         const ChannelSet& ch, double eta3);

// Arithmetic mean of neighboring PUs' stored values; with no neighbors the
// newcomer value applies.
double second_hand(const std::vector<double>& neighbor_reps);

// Per-SU trust values held by one PU.
class ReputationTable {
public:
    // Registers an SU at the newcomer value; no-op if already present.
    void add(int id);
    // Throws std::invalid_argument when r is outside [floor, 1] or the id
    // is unknown (for get).
    void set(int id, double r);
    double get(int id) const;
    bool contains(int id) const;
    bool empty() const { return entries_.empty(); }
    const std::map<int, double>& entries() const { return entries_; }

private:
    std::map<int, double> entries_;
};

}  // namespace spectra
