#include "spectra/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectra {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_time_allocation(const TimeAllocation& ta) {
    if (!(ta.alpha > 0.0 && ta.alpha < 1.0 && ta.beta > 0.0 && ta.beta < 1.0)) {
        throw std::invalid_argument("time allocation: alpha and beta must lie in (0,1)");
    }
}

// Constants of (ta, su, ch, gp) for repeated follower-utility evaluation.
// With s = (1-beta)/(beta(1+rho)) the substituted quantities are affine:
//   P_C(p) = pc0 - s p,   P_C + P_J = (1+rho) P_C,
//   ln-argument L(p) = L0 - A p,  A = s (g_sp + rho g_se) + g_ss.
struct FollowerCtx {
    double a;        // alpha (1-beta) T
    double phase2;   // alpha beta T
    double gss2;     // g_ss / sigma2
    double pc0;      // p_max / (beta (1+rho))
    double pc_slope; // s
    double one_rho;  // 1 + rho
    double l0;       // pc0 (g_sp + rho g_se) + 1
    double slope_a;  // A
    double eta1;
    double eta2;
    double p_limit;  // p_max / (1-beta)
    double ub;       // feasible upper end
    double tol;      // golden-section absolute tolerance

    double utility(double p) const {
        const double svc = one_rho * (pc0 - pc_slope * p);
        const double ln_arg = l0 - slope_a * p;
        return a * std::log2(1.0 + p * gss2) - eta1 * a * p -
               eta2 * phase2 * svc + std::log(ln_arg);
    }

    // dU/dp; the eta2 service-cost slope simplifies to +eta2 * a.
    double slope(double p) const {
        return a * (gss2 / (kLn2 * (1.0 + p * gss2)) - eta1 + eta2) -
               slope_a / (l0 - slope_a * p);
    }
};

FollowerCtx make_ctx(const TimeAllocation& ta, const SuConfig& su,
                     const ChannelSet& ch, const GameParams& gp) {
    FollowerCtx c;
    c.a = ta.alpha * (1.0 - ta.beta) * gp.t_slot;
    c.phase2 = ta.alpha * ta.beta * gp.t_slot;
    c.gss2 = ch.g_ss / gp.sigma2;
    c.one_rho = 1.0 + gp.rho;
    c.pc0 = su.p_max / (ta.beta * c.one_rho);
    c.pc_slope = (1.0 - ta.beta) / (ta.beta * c.one_rho);
    const double eff = ch.g_sp + gp.rho * ch.g_se;
    c.l0 = c.pc0 * eff + 1.0;
    c.slope_a = c.pc_slope * eff + ch.g_ss;
    c.eta1 = gp.eta1;
    c.eta2 = gp.eta2;
    c.p_limit = su.p_max / (1.0 - ta.beta);
    double p_ln = std::numeric_limits<double>::infinity();
    if (c.slope_a > 0.0) p_ln = (c.l0 - kLnArgFloor) / c.slope_a;
    c.ub = std::min(c.p_limit, p_ln);
    c.tol = 1e-6 * su.p_max;
    return c;
}

// Golden-section maximizer of the strictly concave follower utility on
// [0, ub], with corner shortcuts (a nonpositive slope at 0, or nonnegative
// at ub, pins the maximizer at that endpoint -- the same point the full
// search with endpoint comparison returns) and explicit endpoint checks.
BestResponse best_response_ctx(const FollowerCtx& c) {
    constexpr double invphi = 0.6180339887498949;
    constexpr double invphi2 = 0.3819660112501051;

    if (c.slope(0.0) <= 0.0) return {0.0, c.utility(0.0)};
    if (c.ub > c.tol && c.slope(c.ub) >= 0.0) return {c.ub, c.utility(c.ub)};

    double lo = 0.0;
    double hi = c.ub;
    double h = hi - lo;
    if (h > c.tol) {
        double x1 = lo + invphi2 * h;
        double x2 = lo + invphi * h;
        double f1 = c.utility(x1);
        double f2 = c.utility(x2);
        while (h > c.tol) {
            if (f1 >= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                h = hi - lo;
                x1 = lo + invphi2 * h;
                f1 = c.utility(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                h = hi - lo;
                x2 = lo + invphi * h;
                f2 = c.utility(x2);
            }
        }
    }
    const double x = 0.5 * (lo + hi);
    BestResponse br{x, c.utility(x)};
    const double f_left = c.utility(0.0);
    if (f_left >= br.utility) br = {0.0, f_left};
    const double f_right = c.utility(c.ub);
    if (f_right > br.utility) br = {c.ub, f_right};
    return br;
}

}  // namespace

double secrecy_rate(const TimeAllocation& ta, const PowerAllocation& pw,
                    const ChannelSet& ch, const GameParams& gp) {
    check_time_allocation(ta);
    const double direct =
        (1.0 - ta.alpha) * gp.t_slot * std::log2(1.0 + gp.p_p * ch.g_ps / gp.sigma2);
    const double phase2 = ta.alpha * ta.beta * gp.t_slot;
    const double relayed = phase2 * std::log2(1.0 + pw.p_c * ch.g_sp / gp.sigma2);
    const double leaked =
        phase2 * std::log2(1.0 + pw.p_c * ch.g_se / (gp.sigma2 + pw.p_j * ch.g_se));
    return std::max(std::min(direct, relayed) - leaked, 0.0);
}

bool secrecy_feasible(const ChannelSet& ch) {
    return ch.g_ps > ch.g_se && ch.g_sp > ch.g_se;
}

double max_own_power(const TimeAllocation& ta, const SuConfig& su) {
    check_time_allocation(ta);
    return su.p_max / (1.0 - ta.beta);
}

PowerAllocation dependent_powers(double p_s, const TimeAllocation& ta,
                                 const SuConfig& su, const GameParams& gp) {
    const double limit = max_own_power(ta, su);
    if (!(p_s >= 0.0) || p_s > limit * (1.0 + 1e-12)) {
        throw std::domain_error("dependent_powers: p_s " + std::to_string(p_s) +
                                " outside [0, " + std::to_string(limit) + "]");
    }
    double residual = su.p_max - (1.0 - ta.beta) * p_s;
    if (residual < 0.0) residual = 0.0;  // roundoff at the p_s = limit corner
    PowerAllocation pw;
    pw.p_s = p_s;
    pw.p_c = residual / (ta.beta * (1.0 + gp.rho));
    pw.p_j = gp.rho * pw.p_c;
    return pw;
}

std::optional<double> su_utility(double p_s, const TimeAllocation& ta,
                                 const SuConfig& su, const ChannelSet& ch,
                                 const GameParams& gp) {
    const PowerAllocation pw = dependent_powers(p_s, ta, su, gp);
    const double ln_arg = pw.p_j * ch.g_se + pw.p_c * ch.g_sp - p_s * ch.g_ss + 1.0;
    if (!(ln_arg > kLnArgFloor)) return std::nullopt;
    const double a = ta.alpha * (1.0 - ta.beta) * gp.t_slot;
    const double phase2 = ta.alpha * ta.beta * gp.t_slot;
    return a * std::log2(1.0 + p_s * ch.g_ss / gp.sigma2) - gp.eta1 * a * p_s -
           gp.eta2 * phase2 * (pw.p_c + pw.p_j) + std::log(ln_arg);
}

std::optional<double> utility_second_derivative(double p_s,
                                                const TimeAllocation& ta,
                                                const SuConfig& su,
                                                const ChannelSet& ch,
                                                const GameParams& gp) {
    const PowerAllocation pw = dependent_powers(p_s, ta, su, gp);
    const double ln_arg = pw.p_j * ch.g_se + pw.p_c * ch.g_sp - p_s * ch.g_ss + 1.0;
    if (!(ln_arg > kLnArgFloor)) return std::nullopt;
    const double a = ta.alpha * (1.0 - ta.beta) * gp.t_slot;
    const double gss2 = ch.g_ss / gp.sigma2;
    const double s = (1.0 - ta.beta) / (ta.beta * (1.0 + gp.rho));
    const double big_a = s * ch.g_sp + gp.rho * s * ch.g_se + ch.g_ss;
    const double snr_den = 1.0 + p_s * gss2;
    return -(a / kLn2) * (gss2 * gss2) / (snr_den * snr_den) -
           (big_a * big_a) / (ln_arg * ln_arg);
}

std::optional<BestResponse> su_best_response(const TimeAllocation& ta,
                                             const SuConfig& su,
                                             const ChannelSet& ch,
                                             const GameParams& gp) {
    check_time_allocation(ta);
    const FollowerCtx c = make_ctx(ta, su, ch, gp);
    if (!(c.ub >= 0.0) || !(c.l0 > kLnArgFloor)) return std::nullopt;
    return best_response_ctx(c);
}

StackelbergSolution stackelberg_solve(const SuConfig& su, const ChannelSet& ch,
                                      const GameParams& gp, int grid) {
    if (grid < 1) throw std::invalid_argument("stackelberg_solve: grid must be >= 1");
    StackelbergSolution sol;
    if (!secrecy_feasible(ch)) return sol;  // no lease

    const double t = gp.t_slot;
    const double direct_cap = std::log2(1.0 + gp.p_p * ch.g_ps / gp.sigma2);

    std::vector<double> frac(grid);
    for (int i = 0; i < grid; ++i) frac[i] = static_cast<double>(i + 1) / (grid + 1);

    // Per-beta cap on the relayed-link term (P_C is largest at p_s = 0).
    std::vector<double> relay_cap(grid);
    for (int j = 0; j < grid; ++j) {
        const double pc0 = su.p_max / (frac[j] * (1.0 + gp.rho));
        relay_cap[j] = std::log2(1.0 + pc0 * ch.g_sp / gp.sigma2);
    }

    struct Incumbent {
        double rate = -1.0;
        long idx = std::numeric_limits<long>::max();
        int i = -1, j = -1;
        BestResponse br;
    } best;

    auto evaluate = [&](int i, int j) {
        const TimeAllocation ta{frac[i], frac[j]};
        const FollowerCtx c = make_ctx(ta, su, ch, gp);
        const BestResponse br = best_response_ctx(c);
        const PowerAllocation pw = dependent_powers(br.p_s, ta, su, gp);
        const double rate = secrecy_rate(ta, pw, ch, gp);
        const long idx = static_cast<long>(i) * grid + j;
        if (rate > best.rate || (rate == best.rate && idx < best.idx)) {
            best = {rate, idx, i, j, br};
        }
    };

    // Coarse seeding pass: a strong early incumbent sharpens the bound
    // pruning in the full pass below.
    const int stride = std::max(1, grid / 12);
    for (int i = 0; i < grid; i += stride)
        for (int j = 0; j < grid; j += stride) evaluate(i, j);

    // Full pass in canonical order (alpha ascending, then beta) so exact
    // ties resolve to the smaller alpha, then smaller beta. A point is
    // skipped only when an upper bound on its rate shows it cannot beat
    // (or, for points after the incumbent, tie) the incumbent. The slack
    // factor absorbs last-ulp differences between bound and rate paths.
    constexpr double slack = 1.0 + 1e-12;
    for (int i = 0; i < grid; ++i) {
        const double b1 = (1.0 - frac[i]) * t * direct_cap;
        for (int j = 0; j < grid; ++j) {
            const long idx = static_cast<long>(i) * grid + j;
            if (idx == best.idx) continue;
            const double b2 = frac[i] * frac[j] * t * relay_cap[j];
            const double bound = std::min(b1, b2) * slack;
            if (idx > best.idx) {
                if (bound <= best.rate) continue;
            } else {
                if (bound < best.rate) continue;
            }
            evaluate(i, j);
        }
    }

    const TimeAllocation ta{frac[best.i], frac[best.j]};
    sol.leased = true;
    sol.alpha_star = ta.alpha;
    sol.beta_star = ta.beta;
    sol.powers = dependent_powers(best.br.p_s, ta, su, gp);
    sol.secrecy_rate = best.rate;
    sol.su_utility = su_utility(best.br.p_s, ta, su, ch, gp).value();
    return sol;
}

}  // namespace spectra
