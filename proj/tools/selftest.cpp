#include "selftest.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "spectra/game.hpp"
#include "spectra/reputation.hpp"

namespace {

using namespace spectra;

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? " ok " : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++g_failures;
}

struct Instance {
    TimeAllocation ta;
    SuConfig su;
    ChannelSet ch;
    GameParams gp;
};

double exp_draw(Rng& rng, double mean) {
    return -mean * std::log(1.0 - rng.uniform01());
}

Instance random_instance(Rng& rng) {
    Instance in;
    in.ta.alpha = rng.uniform(0.05, 0.95);
    in.ta.beta = rng.uniform(0.05, 0.95);
    in.su.p_max = rng.uniform(0.5, 2.0);
    in.gp.rho = rng.uniform(0.3, 1.5);
    do {
        in.ch.g_ps = exp_draw(rng, 1.0);
        in.ch.g_sp = exp_draw(rng, 1.0);
        in.ch.g_ss = exp_draw(rng, 1.0);
        in.ch.g_se = exp_draw(rng, 0.2);
    } while (!secrecy_feasible(in.ch));
    return in;
}

void check_channel_moment() {
    Rng rng(7);
    const int n = 100000;
    const double d = 2.0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += sample_gain(d, rng).power_gain();
    const double mean = sum / n;
    const double expect = 1.0 / (d * d);
    const double se = expect / std::sqrt(static_cast<double>(n));
    report("channel power-gain moment", std::abs(mean - expect) <= 4.0 * se,
           "mean " + std::to_string(mean));
}

void check_energy_identity() {
    Rng rng(11);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        const Instance in = random_instance(rng);
        const double p_s = rng.uniform(0.0, max_own_power(in.ta, in.su));
        const PowerAllocation pw = dependent_powers(p_s, in.ta, in.su, in.gp);
        const double lhs = in.ta.beta * (pw.p_c + pw.p_j) + (1.0 - in.ta.beta) * pw.p_s;
        ok = std::abs(lhs - in.su.p_max) <= 1e-9 * in.su.p_max &&
             std::abs(pw.p_j - in.gp.rho * pw.p_c) <= 1e-9 * (pw.p_j + 1e-300);
    }
    report("energy identity and jamming ratio", ok);
}

void check_concavity() {
    Rng rng(13);
    bool ok = true;
    int tried = 0;
    while (tried < 200 && ok) {
        const Instance in = random_instance(rng);
        const double hi = max_own_power(in.ta, in.su);
        const double p1 = rng.uniform(0.0, hi);
        const double p2 = rng.uniform(0.0, hi);
        const double mid = 0.5 * (p1 + p2);
        const auto u1 = su_utility(p1, in.ta, in.su, in.ch, in.gp);
        const auto u2 = su_utility(p2, in.ta, in.su, in.ch, in.gp);
        const auto um = su_utility(mid, in.ta, in.su, in.ch, in.gp);
        if (!u1 || !u2 || !um) continue;
        ++tried;
        ok = *um >= 0.5 * (*u1 + *u2) - 1e-12;
    }
    report("utility midpoint concavity", ok);
}

void check_second_derivative() {
    Rng rng(17);
    bool ok = true;
    int tried = 0;
    while (tried < 100 && ok) {
        const Instance in = random_instance(rng);
        const double hi = max_own_power(in.ta, in.su);
        const double h = 1e-4 * in.su.p_max;
        const double p = rng.uniform(2.0 * h, hi - 2.0 * h);
        const auto d2 = utility_second_derivative(p, in.ta, in.su, in.ch, in.gp);
        const auto um = su_utility(p - h, in.ta, in.su, in.ch, in.gp);
        const auto u0 = su_utility(p, in.ta, in.su, in.ch, in.gp);
        const auto up = su_utility(p + h, in.ta, in.su, in.ch, in.gp);
        if (!d2 || !um || !u0 || !up) continue;
        ++tried;
        const double fd = (*up - 2.0 * *u0 + *um) / (h * h);
        ok = *d2 < 0.0 && std::abs(fd - *d2) <= 1e-4 * std::abs(*d2);
    }
    report("analytic second derivative vs finite differences", ok);
}

void check_best_response() {
    Rng rng(19);
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
        const Instance in = random_instance(rng);
        const auto br = su_best_response(in.ta, in.su, in.ch, in.gp);
        if (!br) {
            ok = false;
            break;
        }
        double grid_best = -1e300;
        const double hi = max_own_power(in.ta, in.su);
        const int n = 10000;
        for (int k = 0; k <= n; ++k) {
            const double p = hi * k / n;
            const auto u = su_utility(p, in.ta, in.su, in.ch, in.gp);
            if (u && *u > grid_best) grid_best = *u;
        }
        ok = br->utility >= grid_best - 1e-3 * std::abs(grid_best);
    }
    report("best response vs brute-force grid", ok);
}

void check_reputation() {
    const ChannelSet ch{1.0, 3.0, 2.0, 0.2};
    bool ok = epsilon(PowerAllocation{0.5, 2.0, 1.4}, ch) == 6.28;
    // full defection lands on the floor in one step
    ok = ok && first_hand_update(0.9, PowerAllocation{1.0, 0.0, 0.0}, ch, 0.1) ==
                   kReputationFloor;
    // a balanced service/self ratio (eps = 1) is a fixed point
    ok = ok && first_hand_update(0.4, PowerAllocation{1.0, 2.0 / 3.0, 0.0}, ch, 0.1) == 0.4;
    Rng rng(23);
    for (int i = 0; i < 2000 && ok; ++i) {
        PowerAllocation pw{rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0),
                           rng.uniform(0.0, 2.0)};
        ChannelSet c{rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0),
                     rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0)};
        const double r = first_hand_update(
            rng.uniform(kReputationFloor, 1.0), pw, c, 0.1);
        ok = r >= kReputationFloor && r <= 1.0;
    }
    report("reputation bounds and defection crash", ok);
}

}  // namespace

int run_selftest() {
    g_failures = 0;
    check_channel_moment();
    check_energy_identity();
    check_concavity();
    check_second_derivative();
    check_best_response();
    check_reputation();
    std::printf("%s\n", g_failures == 0 ? "selftest passed" : "selftest FAILED");
    return g_failures;
}
