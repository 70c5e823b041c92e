#pragma once

#include <vector>

#include "spectra/rng.hpp"

namespace spectra {

// Node placements closer than this are rejected (d^-2 path gain diverges).
inline constexpr double kMinDistanceM = 0.1;

struct Position {
    double x = 0.0;  // meters
    double y = 0.0;  // meters
};

double distance_m(const Position& a, const Position& b);

// One Rayleigh-faded complex channel coefficient.
struct ComplexGain {
    double re = 0.0;
    double im = 0.0;
    double power_gain() const { return re * re + im * im; }
};

// Squared channel magnitudes for the four links of one secondary user.
// These are the only channel quantities the game equations consume.
struct ChannelSet {
    double g_ps = 0.0;  // |h|^2, PU transmitter -> SU transmitter
    double g_sp = 0.0;  // |h|^2, SU transmitter -> PU receiver
    double g_ss = 0.0;  // |h|^2, SU transmitter -> SU receiver
    double g_se = 0.0;  // |h|^2, SU transmitter -> eavesdropper
};

// Node layout for one slot: primary pair, eavesdropper, per-SU radios.
// st[i] and sr[i] are SU i's transmitter and receiver.
struct Topology {
    Position pt;
    Position pr;
    Position ed;
    std::vector<Position> st;
    std::vector<Position> sr;
};

// Samples h ~ CN(0, d^-2): each component is N(0, d^-2 / 2), so the
// expected power gain is d^-2. Throws std::domain_error below kMinDistanceM.
ComplexGain sample_gain(double distance, Rng& rng);

// One freshly faded ChannelSet per SU (block fading: channels are
// resampled every slot, constant within a slot).
std::vector<ChannelSet> build_channels(const Topology& topo, Rng& rng);

}  // namespace spectra
