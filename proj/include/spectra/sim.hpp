#pragma once

#include <cstdint>
#include <vector>

#include "spectra/selection.hpp"
#include "spectra/table.hpp"

namespace spectra {

enum class BehaviorKind { reliable, selfish };

struct SuBehavior {
    BehaviorKind kind = BehaviorKind::reliable;
    double deviation_prob = 0.0;  // reliable implies 0
};

// Full run configuration with every default materialized; the cli module
// builds these from config files and flag overrides.
struct ScenarioConfig {
    int n_sus = 10;
    double selfish_fraction = 0.7;
    double deviation_prob = 0.2;
    int n_slots = 500;
    int n_runs = 20;        // independent repetitions averaged in scenario 2
    int window = 50;        // sliding-window width, slots
    int realizations = 500; // channel realizations per sweep point, scenario 1
    int leader_grid = kDefaultLeaderGrid;

    // Deployment square side around the PU; SU placement radii derive from
    // it (selfish disk region/4, reliable annulus region/4 .. region/2).
    double region_m = 160.0;

    Position pt{0.0, 0.0};
    Position pr{100.0, 0.0};
    // Fixed eavesdropper (scenario 2): far enough out that the secrecy
    // filter passes near-uniformly across the deployment region.
    Position ed{1000.0, 0.0};
    Position st{50.0, 0.0};    // single-SU transmitter (scenario 1)
    Position sr{50.0, 30.0};   // single-SU receiver (scenario 1)
    double sr_offset_m = 30.0; // ST-to-SR spacing for redrawn SUs

    // Eavesdropper-to-ST distances swept in scenario 1; ED sits at
    // (st.x + d, st.y).
    std::vector<double> sweep{25, 30, 35, 40, 45, 50, 55, 60};

    GameParams game;
    SuConfig su;
    std::uint64_t seed = 12345;
    PolicyKind policy = PolicyKind::reputation;
};

// One game round.
struct SlotOutcome {
    int slot = 0;
    int selected = -1;  // -1: no feasible candidate, PU did not lease
    double alpha_star = 0.0;
    double beta_star = 0.0;
    PowerAllocation declared;
    PowerAllocation realized;
    bool deviated = false;
    double secrecy_rate = 0.0;          // realized
    std::vector<double> reputation;     // post-update snapshot, by SU id
};

// Mutable per-run state. Reputation carries across slots; the topology's
// SU positions may be redrawn between slots.
struct SimState {
    Topology topo;
    std::vector<SuBehavior> behavior;
    ReputationTable reputation;
};

// Independent substreams for one slot, all derived from the master seed,
// so selection- or behavior-path differences cannot shift channel draws.
struct SlotStreams {
    Rng channels;
    Rng selection;
    Rng behavior;
};

SlotStreams slot_streams(std::uint64_t run_seed, int slot);

// The declared powers survive unless a selfish deviation draw fires, in
// which case the whole budget goes to own transmission (p_s = p_max/(1-b),
// no relaying, no jamming -- the energy identity still holds).
std::pair<PowerAllocation, bool> apply_behavior(const SuBehavior& behavior,
                                                const PowerAllocation& declared,
                                                const TimeAllocation& ta,
                                                const SuConfig& su, Rng& rng);

// One round: sample channels, filter secrecy-feasible SUs, select per
// policy, solve the leader-follower game, apply behavior, score the
// realized secrecy rate and update the selected SU's reputation.
SlotOutcome run_slot(SimState& state, const ScenarioConfig& cfg, int slot,
                     SlotStreams& streams);

// Sweep of the eavesdropper distance with a single SU: Stackelberg
// outcomes averaged over the cfg.realizations channel draws, restricted
// to draws for which the PU leases at every swept position (common
// random numbers couple the sweep, so only g_se varies per draw).
// Columns: distance_m, mean_secrecy_rate, mean_p_j_mw, mean_alpha_beta.
ResultTable run_scenario1(const std::vector<double>& sweep,
                          const ScenarioConfig& cfg);

// Multi-SU selection-policy comparison: per policy, cfg.n_runs runs of
// cfg.n_slots slots with identical seeds, SU positions redrawn each slot
// (selfish nearer the PU). Reports the sliding-window fraction of slots
// in which a selfish-class SU was selected. Columns: window_end_slot,
// policy, p_unreliable.
ResultTable run_scenario2(const ScenarioConfig& cfg);

}  // namespace spectra
