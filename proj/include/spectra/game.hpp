#pragma once

#include <optional>

#include "spectra/channel.hpp"

namespace spectra {

// Reputation-term argument (the ln in the SU utility) must stay above this
// floor; smaller values mark the point infeasible for the follower.
inline constexpr double kLnArgFloor = 1e-12;

// Leader strategy grid: G x G uniform points on (0,1)^2, endpoints excluded.
inline constexpr int kDefaultLeaderGrid = 99;

struct GameParams {
    double p_p = 3.0;     // PU transmit power, mW
    double sigma2 = 1.0;  // noise power, mW
    double rho = 0.7;     // jamming-to-relaying power ratio P_J / P_C
    double eta1 = 0.004;  // own-transmission power cost, per mW
    double eta2 = 0.0005; // service power cost, per mW
    double eta3 = 0.1;    // reputation step coefficient
    double t_slot = 1.0;  // slot duration
};

// Leader strategy: slot split into broadcast (1-alpha)T, cooperation
// alpha*beta*T and SU-own alpha*(1-beta)*T phases. Both fractions in (0,1).
struct TimeAllocation {
    double alpha = 0.5;
    double beta = 0.5;
};

// Follower strategy, all in mW.
struct PowerAllocation {
    double p_s = 0.0;  // own transmission
    double p_c = 0.0;  // relaying
    double p_j = 0.0;  // jamming
};

struct SuConfig {
    double p_max = 1.0;  // per-slot average power budget, mW
};

struct BestResponse {
    double p_s = 0.0;
    double utility = 0.0;
};

struct StackelbergSolution {
    bool leased = false;  // false: infeasible channel, PU does not lease
    double alpha_star = 0.0;
    double beta_star = 0.0;
    PowerAllocation powers;  // powers.p_s is the follower's best response
    double secrecy_rate = 0.0;
    double su_utility = 0.0;
};

// Primary secrecy rate for one slot:
//   [ min( (1-a)T log2(1 + P_P g_ps / s2), abT log2(1 + P_C g_sp / s2) )
//     - abT log2(1 + P_C g_se / (s2 + P_J g_se)) ]+
// The clamp at zero is applied once, on the full expression.
double secrecy_rate(const TimeAllocation& ta, const PowerAllocation& pw,
                    const ChannelSet& ch, const GameParams& gp);

// Nonzero secrecy requires g_ps > g_se and g_sp > g_se (strict).
bool secrecy_feasible(const ChannelSet& ch);

// Largest own-transmission power compatible with nonnegative service
// powers: p_max / (1 - beta).
double max_own_power(const TimeAllocation& ta, const SuConfig& su);

// Service powers implied by p_s under the exhausted energy budget
//   beta (P_C + P_J) + (1 - beta) p_s = p_max,  P_J = rho P_C.
// Throws std::domain_error when p_s lies outside [0, max_own_power].
PowerAllocation dependent_powers(double p_s, const TimeAllocation& ta,
                                 const SuConfig& su, const GameParams& gp);

// Follower utility as a function of p_s alone (service powers substituted):
//   a(1-b)T log2(1 + p_s g_ss / s2) - eta1 a(1-b)T p_s - eta2 abT (P_C + P_J)
//     + ln(P_J g_se + P_C g_sp - p_s g_ss + 1)
// Returns nullopt when the ln argument falls below kLnArgFloor.
std::optional<double> su_utility(double p_s, const TimeAllocation& ta,
                                 const SuConfig& su, const ChannelSet& ch,
                                 const GameParams& gp);

// Analytic d2U/dp_s2; strictly negative on the feasible interior.
std::optional<double> utility_second_derivative(double p_s,
                                                const TimeAllocation& ta,
                                                const SuConfig& su,
                                                const ChannelSet& ch,
                                                const GameParams& gp);

// Unique utility maximizer over [0, max_own_power] intersected with the
// ln-argument-positive region, by golden-section search to absolute
// tolerance 1e-6 * p_max with explicit endpoint comparison.
std::optional<BestResponse> su_best_response(const TimeAllocation& ta,
                                             const SuConfig& su,
                                             const ChannelSet& ch,
                                             const GameParams& gp);

// Backward induction: for every leader grid point the follower's best
// response is anticipated, the implied service powers derived and the
// secrecy rate evaluated; returns the grid argmax (ties: smaller alpha,
// then smaller beta). Infeasible channels yield a no-lease solution.
StackelbergSolution stackelberg_solve(const SuConfig& su, const ChannelSet& ch,
                                      const GameParams& gp,
                                      int grid = kDefaultLeaderGrid);

}  // namespace spectra
