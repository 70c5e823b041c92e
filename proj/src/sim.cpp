#include "spectra/sim.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "spectra/parallel.hpp"

namespace spectra {

namespace {

// Stream-splitting tags (see rng.hpp for the derivation rule).
constexpr std::uint64_t kTagRun = 0x01;
constexpr std::uint64_t kTagChannels = 0x02;
constexpr std::uint64_t kTagSelection = 0x03;
constexpr std::uint64_t kTagBehavior = 0x04;
constexpr std::uint64_t kTagPositions = 0x05;
constexpr std::uint64_t kTagSweep = 0x06;

int selfish_count(const ScenarioConfig& cfg) {
    return static_cast<int>(std::llround(cfg.n_sus * cfg.selfish_fraction));
}

// Scenario 2 mobility: selfish SUs uniform in the disk of radius region/4
// around the PU transmitter, reliable SUs uniform in the region/4..region/2
// annulus; each SU receiver sits sr_offset away from its transmitter at a
// uniform angle. Draws are rejected until every modeled link clears the
// minimum-distance floor.
void redraw_su_positions(Topology& topo, int n_selfish,
                         const ScenarioConfig& cfg, Rng& rng) {
    const double r_disk = cfg.region_m / 4.0;
    const double r_in = cfg.region_m / 4.0;
    const double r_out = cfg.region_m / 2.0;
    const int n = static_cast<int>(topo.st.size());
    for (int id = 0; id < n; ++id) {
        for (;;) {
            const double u_r = rng.uniform01();
            const double theta = 2.0 * std::numbers::pi * rng.uniform01();
            const double phi = 2.0 * std::numbers::pi * rng.uniform01();
            const double radius =
                id < n_selfish
                    ? r_disk * std::sqrt(u_r)
                    : std::sqrt(r_in * r_in + u_r * (r_out * r_out - r_in * r_in));
            const Position st{topo.pt.x + radius * std::cos(theta),
                              topo.pt.y + radius * std::sin(theta)};
            const Position sr{st.x + cfg.sr_offset_m * std::cos(phi),
                              st.y + cfg.sr_offset_m * std::sin(phi)};
            if (distance_m(topo.pt, st) >= kMinDistanceM &&
                distance_m(st, topo.pr) >= kMinDistanceM &&
                distance_m(st, topo.ed) >= kMinDistanceM &&
                distance_m(st, sr) >= kMinDistanceM) {
                topo.st[id] = st;
                topo.sr[id] = sr;
                break;
            }
        }
    }
}

}  // namespace

SlotStreams slot_streams(std::uint64_t run_seed, int slot) {
    const auto s = static_cast<std::uint64_t>(slot);
    return SlotStreams{Rng(derive_seed(run_seed, kTagChannels, s)),
                       Rng(derive_seed(run_seed, kTagSelection, s)),
                       Rng(derive_seed(run_seed, kTagBehavior, s))};
}

std::pair<PowerAllocation, bool> apply_behavior(const SuBehavior& behavior,
                                                const PowerAllocation& declared,
                                                const TimeAllocation& ta,
                                                const SuConfig& su, Rng& rng) {
    const double draw = rng.uniform01();
    if (behavior.kind == BehaviorKind::selfish && draw < behavior.deviation_prob) {
        PowerAllocation realized;
        realized.p_s = max_own_power(ta, su);
        return {realized, true};
    }
    return {declared, false};
}

SlotOutcome run_slot(SimState& state, const ScenarioConfig& cfg, int slot,
                     SlotStreams& streams) {
    SlotOutcome out;
    out.slot = slot;

    const std::vector<ChannelSet> channels = build_channels(state.topo, streams.channels);
    const int n = static_cast<int>(channels.size());

    std::vector<int> candidates;
    for (int id = 0; id < n; ++id) {
        if (secrecy_feasible(channels[id])) candidates.push_back(id);
    }
    const auto snapshot = [&] {
        out.reputation.resize(static_cast<std::size_t>(n));
        for (int id = 0; id < n; ++id) {
            out.reputation[static_cast<std::size_t>(id)] = state.reputation.get(id);
        }
    };
    if (candidates.empty()) {  // no lease this slot
        snapshot();
        return out;
    }

    int selected = -1;
    switch (cfg.policy) {
        case PolicyKind::reputation:
            selected = select_reputation(candidates, state.reputation, streams.selection);
            break;
        case PolicyKind::random:
            selected = select_random(candidates, streams.selection);
            break;
        case PolicyKind::best_csi:
            selected = select_best_csi(candidates, channels);
            break;
    }

    const StackelbergSolution sol =
        stackelberg_solve(cfg.su, channels[selected], cfg.game, cfg.leader_grid);
    const TimeAllocation ta{sol.alpha_star, sol.beta_star};
    out.selected = selected;
    out.alpha_star = sol.alpha_star;
    out.beta_star = sol.beta_star;
    out.declared = sol.powers;

    auto [realized, deviated] = apply_behavior(
        state.behavior[static_cast<std::size_t>(selected)], sol.powers, ta, cfg.su,
        streams.behavior);
    out.realized = realized;
    out.deviated = deviated;
    out.secrecy_rate = secrecy_rate(ta, realized, channels[selected], cfg.game);

    const double r_prev = state.reputation.get(selected);
    state.reputation.set(
        selected, first_hand_update(r_prev, realized, channels[selected], cfg.game.eta3));
    snapshot();
    return out;
}

ResultTable run_scenario1(const std::vector<double>& sweep,
                          const ScenarioConfig& cfg) {
    if (sweep.empty()) throw std::invalid_argument("scenario 1: empty distance sweep");
    const double d_ps = distance_m(cfg.pt, cfg.st);
    const double d_sp = distance_m(cfg.st, cfg.pr);
    const double d_ss = distance_m(cfg.st, cfg.sr);
    for (double d : {d_ps, d_sp, d_ss}) {
        if (d < kMinDistanceM) {
            throw std::invalid_argument("scenario 1: fixed geometry below minimum distance");
        }
    }
    for (double d : sweep) {
        if (d < kMinDistanceM) {
            throw std::invalid_argument("scenario 1: sweep distance below minimum distance");
        }
    }

    struct Partial {
        std::vector<double> rate, p_j, ab;
        bool leased_everywhere = false;
    };
    const std::size_t n_d = sweep.size();
    const std::size_t m = static_cast<std::size_t>(cfg.realizations);
    std::vector<Partial> partials(m);

    parallel_for(m, [&](std::size_t k) {
        // Common random numbers across the sweep: one set of unit-distance
        // coefficients per realization, scaled per link, so only g_se moves
        // with the swept eavesdropper distance. A realization enters the
        // averages only when the secrecy condition holds at every swept
        // position; otherwise the feasibility filter biases the data-link
        // statistics differently at each distance and drowns the trends
        // the sweep is meant to expose.
        Rng rng(derive_seed(cfg.seed, kTagSweep, k));
        const double w_ps = sample_gain(1.0, rng).power_gain();
        const double w_sp = sample_gain(1.0, rng).power_gain();
        const double w_ss = sample_gain(1.0, rng).power_gain();
        const double w_se = sample_gain(1.0, rng).power_gain();
        Partial& p = partials[k];
        p.rate.assign(n_d, 0.0);
        p.p_j.assign(n_d, 0.0);
        p.ab.assign(n_d, 0.0);
        for (std::size_t di = 0; di < n_d; ++di) {
            const double d_se = sweep[di];
            const ChannelSet ch{w_ps / (d_ps * d_ps), w_sp / (d_sp * d_sp),
                                w_ss / (d_ss * d_ss), w_se / (d_se * d_se)};
            if (!secrecy_feasible(ch)) return;  // leased_everywhere stays false
        }
        for (std::size_t di = 0; di < n_d; ++di) {
            const double d_se = sweep[di];
            const ChannelSet ch{w_ps / (d_ps * d_ps), w_sp / (d_sp * d_sp),
                                w_ss / (d_ss * d_ss), w_se / (d_se * d_se)};
            const StackelbergSolution sol =
                stackelberg_solve(cfg.su, ch, cfg.game, cfg.leader_grid);
            p.rate[di] = sol.secrecy_rate;
            p.p_j[di] = sol.powers.p_j;
            p.ab[di] = sol.alpha_star * sol.beta_star;
        }
        p.leased_everywhere = true;
    });

    ResultTable table;
    table.columns = {"distance_m", "mean_secrecy_rate", "mean_p_j_mw", "mean_alpha_beta"};
    for (std::size_t di = 0; di < n_d; ++di) {
        double rate = 0.0, p_j = 0.0, ab = 0.0;
        long n = 0;
        for (std::size_t k = 0; k < m; ++k) {  // fixed reduction order
            if (!partials[k].leased_everywhere) continue;
            rate += partials[k].rate[di];
            p_j += partials[k].p_j[di];
            ab += partials[k].ab[di];
            ++n;
        }
        const double denom = n > 0 ? static_cast<double>(n) : 1.0;
        table.rows.push_back({ResultTable::Cell{sweep[di]}, ResultTable::Cell{rate / denom},
                              ResultTable::Cell{p_j / denom}, ResultTable::Cell{ab / denom}});
    }
    return table;
}

ResultTable run_scenario2(const ScenarioConfig& cfg) {
    const std::array<PolicyKind, 3> policies{PolicyKind::reputation, PolicyKind::random,
                                             PolicyKind::best_csi};
    const int n = cfg.n_sus;
    const int slots = cfg.n_slots;
    const int runs = cfg.n_runs;
    const int window = cfg.window;
    if (window < 1 || window > slots) {
        throw std::invalid_argument("scenario 2: window must lie in [1, n_slots]");
    }
    const int n_selfish = selfish_count(cfg);

    // One trace per (policy, run); the run seed does not involve the
    // policy, so every policy sees identical channel and position draws.
    std::vector<std::vector<std::uint8_t>> selfish_sel(
        policies.size() * static_cast<std::size_t>(runs));

    parallel_for(selfish_sel.size(), [&](std::size_t t) {
        const std::size_t pi = t / static_cast<std::size_t>(runs);
        const int run = static_cast<int>(t % static_cast<std::size_t>(runs));

        ScenarioConfig local = cfg;
        local.policy = policies[pi];

        SimState state;
        state.topo.pt = cfg.pt;
        state.topo.pr = cfg.pr;
        state.topo.ed = cfg.ed;
        state.topo.st.resize(static_cast<std::size_t>(n));
        state.topo.sr.resize(static_cast<std::size_t>(n));
        state.behavior.resize(static_cast<std::size_t>(n));
        for (int id = 0; id < n; ++id) {
            state.behavior[static_cast<std::size_t>(id)] =
                id < n_selfish ? SuBehavior{BehaviorKind::selfish, cfg.deviation_prob}
                               : SuBehavior{BehaviorKind::reliable, 0.0};
            state.reputation.add(id);
        }

        std::vector<std::uint8_t> trace(static_cast<std::size_t>(slots), 0);
        const std::uint64_t run_seed =
            derive_seed(cfg.seed, kTagRun, static_cast<std::uint64_t>(run));
        for (int s = 0; s < slots; ++s) {
            Rng pos_rng(derive_seed(run_seed, kTagPositions, static_cast<std::uint64_t>(s)));
            redraw_su_positions(state.topo, n_selfish, cfg, pos_rng);
            SlotStreams streams = slot_streams(run_seed, s);
            const SlotOutcome out = run_slot(state, local, s, streams);
            trace[static_cast<std::size_t>(s)] =
                out.selected >= 0 && out.selected < n_selfish ? 1 : 0;
        }
        selfish_sel[t] = std::move(trace);
    });

    ResultTable table;
    table.columns = {"window_end_slot", "policy", "p_unreliable"};
    for (int end = window; end <= slots; ++end) {
        for (std::size_t pi = 0; pi < policies.size(); ++pi) {
            long hits = 0;
            for (int run = 0; run < runs; ++run) {
                const auto& trace = selfish_sel[pi * static_cast<std::size_t>(runs) +
                                                static_cast<std::size_t>(run)];
                for (int s = end - window; s < end; ++s) {
                    hits += trace[static_cast<std::size_t>(s)];
                }
            }
            const double p = static_cast<double>(hits) /
                             (static_cast<double>(window) * static_cast<double>(runs));
            table.rows.push_back({ResultTable::Cell{static_cast<double>(end)},
                                  ResultTable::Cell{policy_name(policies[pi])},
                                  ResultTable::Cell{p}});
        }
    }
    return table;
}

}  // namespace spectra
